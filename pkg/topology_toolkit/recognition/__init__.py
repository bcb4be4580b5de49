from topology_toolkit.recognition.cache import RecognitionCache
from topology_toolkit.recognition.recognizer import (
    Recognizer,
    default_recognizer,
    edge_refine_dehn_sommerville,
    is_ball,
    is_contractible,
    is_dehn_sommerville,
    is_manifold,
    is_manifold_with_boundary,
    is_sphere,
)
from topology_toolkit.recognition.morse import (
    CRITICAL,
    IRREGULAR,
    REGULAR,
    MorseData,
    check_locally_injective,
    level_set,
    lower_sphere,
    morse_buildup,
    morse_classify,
    morse_lift,
    poincare_hopf_index,
)

__all__ = [
    "RecognitionCache",
    "Recognizer",
    "default_recognizer",
    "edge_refine_dehn_sommerville",
    "is_ball",
    "is_contractible",
    "is_dehn_sommerville",
    "is_manifold",
    "is_manifold_with_boundary",
    "is_sphere",
    "CRITICAL",
    "IRREGULAR",
    "REGULAR",
    "MorseData",
    "check_locally_injective",
    "level_set",
    "lower_sphere",
    "morse_buildup",
    "morse_classify",
    "morse_lift",
    "poincare_hopf_index",
]
