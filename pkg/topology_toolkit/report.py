"""
Report system.

``InvariantReport`` records the invariants of one complex; ``VerificationReport``
records the checks of a property suite. Both serialize to JSON with sorted
keys so identical inputs give identical bytes.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from topology_toolkit.characteristics.wu import fermi_characteristic, wu
from topology_toolkit.complexes.constants import SCHEMA_VERSION
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import BudgetExceededError, TopologyLimitExceeded
from topology_toolkit.hodge.exterior import betti
from topology_toolkit.hodge.interaction import wu_betti
from topology_toolkit.recognition.recognizer import Recognizer, default_recognizer
from topology_toolkit.topology.open_sets import TopologyEnumerator


def _convert_to_python_types(obj):
    """Convert numpy types to Python native types for JSON serialization."""
    if isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.floating):
        return float(obj)
    elif isinstance(obj, np.bool_):
        return bool(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, dict):
        return {str(k): _convert_to_python_types(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [_convert_to_python_types(item) for item in obj]
    else:
        return obj


def _dump(data: Dict[str, Any], filepath: Optional[str], indent: Optional[int]) -> str:
    text = json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False)
    if filepath is not None:
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
    return text


class InvariantReport:
    """
    Invariants of a single complex.

    Values are stored in insertion order; optional invariants that were not
    requested are simply absent.

    Attributes
    ----------
    name : str
        Registry key or file name of the complex.
    values : dict
        Invariant name to value.
    limit_exceeded : bool
        True when the open-set enumeration stopped at its limit; the
        partial count is then stored under ``open_set_count_partial``.
    warnings : list of str

    Examples
    --------
    >>> report = InvariantReport('octahedron')
    >>> report.add('euler', 2)
    >>> report.to_json()
    '{"name": "octahedron", "schema_version": 1, "values": {"euler": 2}}'
    """

    def __init__(self, name: str):
        self.name = name
        self.values: Dict[str, Any] = {}
        self.limit_exceeded = False
        self.warnings: List[str] = []

    def add(self, key: str, value: Any) -> None:
        self.values[key] = value

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    def __contains__(self, key: str) -> bool:
        return key in self.values

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'schema_version': SCHEMA_VERSION,
            'name': self.name,
            'values': self.values,
        }
        if self.limit_exceeded:
            data['limit_exceeded'] = True
        if self.warnings:
            data['warnings'] = self.warnings
        return _convert_to_python_types(data)

    def to_json(self, filepath: Optional[str] = None, indent: Optional[int] = None) -> str:
        """
        JSON text with sorted keys, written to ``filepath`` when given.
        """
        return _dump(self.to_dict(), filepath, indent)

    def summary(self) -> str:
        lines = []
        lines.append("=" * 60)
        lines.append(f"INVARIANT REPORT: {self.name}")
        lines.append("=" * 60)
        for key, value in self.values.items():
            lines.append(f"{key}: {value}")
        if self.limit_exceeded:
            lines.append("")
            lines.append("Open-set enumeration stopped at its limit")
        if self.warnings:
            lines.append("")
            lines.append("WARNINGS:")
            lines.append("-" * 60)
            for warning in self.warnings:
                lines.append(f"⚠️  {warning}")
        lines.append("=" * 60)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.summary()

    def __repr__(self) -> str:
        return f"<InvariantReport: {self.name}, {len(self.values)} invariants>"


def build_invariant_report(
    G: SimplicialComplex,
    name: str = "complex",
    wu3: bool = False,
    with_wu_betti: bool = False,
    topology_count: bool = False,
    limit: Optional[int] = None,
    config: Optional[ToolkitConfig] = None,
    recognizer: Optional[Recognizer] = None,
    verbose: bool = False,
) -> InvariantReport:
    """
    Compute the invariants of ``G``.

    Always reported: f_vector, dimension, euler, wu2, betti, manifold
    (dimension, or None) and fermi. ``wu3``, ``wu_betti`` and
    ``open_set_count`` only on request.

    A budget or limit that runs out does not raise: the report records a
    warning, and for the open-set count the partial count with
    ``limit_exceeded`` set.

    Examples
    --------
    >>> from topology_toolkit.io import ComplexFactory
    >>> report = build_invariant_report(ComplexFactory.create('octahedron'), 'octahedron')
    >>> report['euler'], report['wu2'], report['betti'], report['manifold']
    (2, 2, [1, 0, 1], 2)
    """
    config = resolve_config(config)
    recognizer = recognizer or default_recognizer()
    report = InvariantReport(name)
    report.add('simplices', len(G))
    report.add('f_vector', list(G.f_vector()))
    report.add('dimension', G.dim)
    report.add('euler', G.euler())
    report.add('wu2', wu(G, 2, config))
    if wu3:
        report.add('wu3', wu(G, 3, config))
    report.add('betti', betti(G))
    if with_wu_betti:
        try:
            report.add('wu_betti', wu_betti(G, config=config, verbose=verbose))
        except BudgetExceededError as e:
            report.warnings.append(str(e))
            if verbose:
                print(f"[WARNING] {e}")
    report.add('manifold', recognizer.is_manifold(G))
    report.add('fermi', fermi_characteristic(G))
    if topology_count:
        enumerator = TopologyEnumerator(limit=limit, config=config, verbose=verbose)
        try:
            report.add('open_set_count', len(enumerator.enumerate(G)))
        except TopologyLimitExceeded as e:
            report.limit_exceeded = True
            report.add('open_set_count_partial', e.partial_count)
            report.warnings.append(str(e))
    return report


@dataclass
class Check:
    """Record of a single property check."""
    name: str
    description: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)


class VerificationReport:
    """
    Outcome of a verification suite.

    Attributes
    ----------
    suite : str
        Suite name.
    seed : int, optional
        Seed of the random complexes.
    checks : list of Check
    warnings : list of str
        Monitored properties that did not hold; they never fail the suite.

    Examples
    --------
    >>> report = VerificationReport('energy', seed=2024)
    >>> report.add_check('inverse', 'L g = I on C4', True)
    >>> report.all_passed
    True
    """

    def __init__(self, suite: str, seed: Optional[int] = None):
        self.suite = suite
        self.seed = seed
        self.checks: List[Check] = []
        self.warnings: List[str] = []

    def add_check(
        self,
        name: str,
        description: str,
        passed: bool,
        details: Optional[Dict[str, Any]] = None,
        warnings: Optional[List[str]] = None,
    ) -> None:
        """
        Add a check to the report.

        Parameters
        ----------
        name : str
            Identity being checked, e.g. ``'green_inverse'``.
        description : str
            Where it was checked.
        passed : bool
        details : dict, optional
            Values on both sides of the identity.
        warnings : list of str, optional
            Monitored observations.
        """
        check = Check(
            name=name,
            description=description,
            passed=bool(passed),
            details=details or {},
            warnings=warnings or [],
        )
        self.checks.append(check)
        if warnings:
            self.warnings.extend(warnings)

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self, verbose: bool = False) -> str:
        """
        Formatted summary, one line per check.

        Parameters
        ----------
        verbose : bool, default False
            Include the details of each check.
        """
        lines = []
        lines.append("=" * 60)
        lines.append(f"VERIFICATION REPORT: {self.suite}")
        lines.append("=" * 60)
        if self.seed is not None:
            lines.append(f"Seed: {self.seed}")
        passed = sum(c.passed for c in self.checks)
        lines.append(f"Checks passed: {passed}/{len(self.checks)}")
        lines.append("")

        if self.checks:
            lines.append("CHECKS:")
            lines.append("-" * 60)
            for check in self.checks:
                mark = "✓" if check.passed else "✗"
                lines.append(f"{mark} {check.name}: {check.description}")
                if verbose or not check.passed:
                    for key, value in check.details.items():
                        lines.append(f"  - {key}: {value}")
            lines.append("")

        if self.warnings:
            lines.append("WARNINGS:")
            lines.append("-" * 60)
            for warning in dict.fromkeys(self.warnings):
                lines.append(f"⚠️  {warning}")
            lines.append("")

        lines.append("=" * 60)
        return "\n".join(lines)

    def get_check_stats(self) -> pd.DataFrame:
        """
        Pass counts per check name.

        Returns
        -------
        pd.DataFrame
            Columns ``check``, ``runs``, ``passed``, ``failed``, ``warnings``.
        """
        if not self.checks:
            return pd.DataFrame()
        data = [
            {
                'check': c.name,
                'passed': int(c.passed),
                'warnings': len(c.warnings),
            }
            for c in self.checks
        ]
        df = pd.DataFrame(data)
        stats = df.groupby('check', sort=False).agg(
            runs=('passed', 'size'),
            passed=('passed', 'sum'),
            warnings=('warnings', 'sum'),
        ).reset_index()
        stats['failed'] = stats['runs'] - stats['passed']
        return stats[['check', 'runs', 'passed', 'failed', 'warnings']]

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'schema_version': SCHEMA_VERSION,
            'suite': self.suite,
            'seed': self.seed,
            'all_passed': self.all_passed,
            'checks': [
                {
                    'name': c.name,
                    'description': c.description,
                    'passed': c.passed,
                    'details': c.details,
                    'warnings': c.warnings,
                }
                for c in self.checks
            ],
            'warnings': self.warnings,
        }
        return _convert_to_python_types(data)

    def to_json(self, filepath: Optional[str] = None, indent: Optional[int] = None) -> str:
        return _dump(self.to_dict(), filepath, indent)

    def __str__(self) -> str:
        return self.summary()

    def __repr__(self) -> str:
        failed = len(self.failures)
        return f"<VerificationReport: {self.suite}, {len(self.checks)} checks, {failed} failed>"
