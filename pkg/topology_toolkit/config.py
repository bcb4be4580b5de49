"""
Configuration system for the toolkit.

Provides centralized limits and budgets with preset support, so that the
library, the verification suites and the command line agree on how much
work an exponential computation is allowed to do.
"""

import copy
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


# Define presets as a module-level constant
_PRESETS: Dict[str, Dict[str, Any]] = {
    'quick': {
        'topology': {'limit': 100_000},
        'recognition': {'cache': True, 'isomorphism_bound': 40},
        'characteristics': {'fast_threshold': 300},
        'energy': {'det_size_bound': 200},
        'hodge': {'wu_betti_seconds': 10.0, 'heat_times': [0.1, 1.0, 10.0], 'heat_tolerance': 1e-8},
        'homeo': {'max_refinements': 1, 'node_budget': 20_000, 'wu_betti_bound': 40, 'isomorphism_bound': 200,
                  'one_direction_check': False},
        'verify': {
            'seed': 2024, 'registry_max': 60, 'tensor_max': 12,
            'random_count': 10, 'random_vertices': [5, 8], 'edge_probability': 0.5,
            'max_simplices': 40, 'samples': 20, 'brouwer_samples': 100, 'level_samples': 5,
        },
    },
    'default': {
        'topology': {'limit': 1_000_000},
        'recognition': {'cache': True, 'isomorphism_bound': 60},
        'characteristics': {'fast_threshold': 300},
        'energy': {'det_size_bound': 400},
        'hodge': {'wu_betti_seconds': 60.0, 'heat_times': [0.1, 1.0, 10.0], 'heat_tolerance': 1e-8},
        'homeo': {'max_refinements': 2, 'node_budget': 1_000_000, 'wu_betti_bound': 60, 'isomorphism_bound': 400,
                  'one_direction_check': False},
        'verify': {
            'seed': 2024, 'registry_max': 120, 'tensor_max': 20,
            'random_count': 50, 'random_vertices': [6, 9], 'edge_probability': 0.5,
            'max_simplices': 60, 'samples': 100, 'brouwer_samples': 1000, 'level_samples': 20,
        },
    },
    'exhaustive': {
        'topology': {'limit': 10_000_000},
        'recognition': {'cache': True, 'isomorphism_bound': 120},
        'characteristics': {'fast_threshold': 300},
        'energy': {'det_size_bound': 1500},
        'hodge': {'wu_betti_seconds': 900.0, 'heat_times': [0.1, 1.0, 10.0], 'heat_tolerance': 1e-8},
        'homeo': {'max_refinements': 2, 'node_budget': 10_000_000, 'wu_betti_bound': 120, 'isomorphism_bound': 2000,
                  'one_direction_check': True},
        'verify': {
            'seed': 2024, 'registry_max': 400, 'tensor_max': 20,
            'random_count': 200, 'random_vertices': [6, 10], 'edge_probability': 0.5,
            'max_simplices': 60, 'samples': 100, 'brouwer_samples': 1000, 'level_samples': 20,
        },
    },
}

_SECTIONS = ('topology', 'recognition', 'characteristics', 'energy', 'hodge', 'homeo', 'verify')


def _section(name: str) -> Any:
    return field(default_factory=lambda: copy.deepcopy(_PRESETS['default'][name]))


@dataclass
class ToolkitConfig:
    """
    Limits and budgets for the exponential parts of the toolkit.

    Attributes
    ----------
    preset : str, optional
        Name of the preset this configuration was built from.
    topology : dict
        ``limit``: maximal number of open sets before enumeration aborts.
    recognition : dict
        ``cache``: memoize verdicts; ``isomorphism_bound``: simplex count up
        to which hash hits are confirmed by an isomorphism test.
    characteristics : dict
        ``fast_threshold``: complex size from which Wu characteristics of
        full complexes use the star formula.
    energy : dict
        ``det_size_bound``: largest matrix whose exact determinant and
        nullity are computed.
    hodge : dict
        ``wu_betti_seconds``: time budget for interaction cohomology;
        ``heat_times`` and ``heat_tolerance`` for the heat-trace check.
    homeo : dict
        ``max_refinements``, ``node_budget``, ``wu_betti_bound`` (largest
        complex for which the screen compares interaction Betti numbers),
        ``isomorphism_bound``, ``one_direction_check`` (search for one-sided
        witnesses on pairs the screen separates).
    verify : dict
        Seed and sizes of the property suites: ``registry_max`` (largest
        registry complex checked), ``tensor_max`` (largest complex for the
        cubic and quartic tuple sums), random complex counts and samples.

    Examples
    --------
    >>> config = ToolkitConfig.from_preset('quick')
    >>> config.topology['limit']
    100000
    >>> config.merge({'homeo': {'max_refinements': 2}}).homeo['max_refinements']
    2
    """

    preset: Optional[str] = None
    topology: Dict[str, Any] = _section('topology')
    recognition: Dict[str, Any] = _section('recognition')
    characteristics: Dict[str, Any] = _section('characteristics')
    energy: Dict[str, Any] = _section('energy')
    hodge: Dict[str, Any] = _section('hodge')
    homeo: Dict[str, Any] = _section('homeo')
    verify: Dict[str, Any] = _section('verify')

    @classmethod
    def from_preset(cls, preset: str) -> 'ToolkitConfig':
        """
        Create a configuration from a named preset.

        Parameters
        ----------
        preset : {'quick', 'default', 'exhaustive'}

        Raises
        ------
        ValueError
            If the preset name is not recognized.
        """
        if preset not in _PRESETS:
            available = ', '.join(_PRESETS.keys())
            raise ValueError(
                f"Unknown preset '{preset}'. Available presets: {available}"
            )
        values = copy.deepcopy(_PRESETS[preset])
        return cls(preset=preset, **values)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'ToolkitConfig':
        """Create a configuration from a dictionary (missing sections keep defaults)."""
        unknown = set(config_dict) - set(_SECTIONS) - {'preset'}
        if unknown:
            raise ValueError(
                f"Unknown configuration sections: {', '.join(sorted(unknown))}. "
                f"Valid sections: {', '.join(_SECTIONS)}"
            )
        return cls(**copy.deepcopy(config_dict))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'preset': self.preset}
        for name in _SECTIONS:
            data[name] = copy.deepcopy(getattr(self, name))
        return data

    def merge(self, other: Dict[str, Any]) -> 'ToolkitConfig':
        """
        Merge a (partial) configuration dict into a copy of this one.

        Dict sections are updated key by key; other values are replaced.
        """
        current = self.to_dict()

        for key, value in other.items():
            if key in current and isinstance(current[key], dict) and isinstance(value, dict):
                current[key].update(value)
            else:
                current[key] = value

        return ToolkitConfig.from_dict(current)


def resolve_config(config: Optional[ToolkitConfig]) -> ToolkitConfig:
    """The given configuration, or the default preset."""
    return config if config is not None else ToolkitConfig.from_preset('default')
