from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from topology_toolkit.hodge.dynamics import SimplexMap

HOMEOMORPHIC = 'homeomorphic'
NOT_HOMEOMORPHIC = 'not_homeomorphic'
INCONCLUSIVE = 'inconclusive'


def _map_to_dict(f: Optional[SimplexMap]) -> Optional[Dict[str, str]]:
    if f is None:
        return None
    return {x.label(): y.label() for x, y in f.as_dict().items()}


@dataclass
class HomeoVerdict:
    """
    Outcome of a homeomorphism test.

    Attributes
    ----------
    result : str
        ``'homeomorphic'``, ``'not_homeomorphic'`` or ``'inconclusive'``.
    certificate : dict
        The mismatching invariant with both values, or the method that
        produced the witnesses. Inconclusive verdicts carry the exhausted
        bounds here.
    forward_witness, backward_witness : SimplexMap, optional
        Continuous surjections G_n -> H and H_m -> G.
    bounds : dict
        Refinement depth, node budget and nodes used.
    one_direction_sufficed : bool, optional
        Whether a one-directional test (a single continuous image) reaches
        the same verdict. Always True for homeomorphic pairs. For separated
        pairs it is only known after the one-sided search enabled by
        ``homeo.one_direction_check``: False when a witness exists in some
        direction, True when none does within the bounds. None otherwise.
    """

    result: str
    certificate: Dict[str, Any] = field(default_factory=dict)
    forward_witness: Optional[SimplexMap] = None
    backward_witness: Optional[SimplexMap] = None
    bounds: Dict[str, Any] = field(default_factory=dict)
    one_direction_sufficed: Optional[bool] = None

    @property
    def is_decided(self) -> bool:
        return self.result != INCONCLUSIVE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'result': self.result,
            'certificate': self.certificate,
            'forward_witness': _map_to_dict(self.forward_witness),
            'backward_witness': _map_to_dict(self.backward_witness),
            'bounds': self.bounds,
            'one_direction_sufficed': self.one_direction_sufficed,
        }

    def __repr__(self) -> str:
        return f"<HomeoVerdict: {self.result} {self.certificate}>"
