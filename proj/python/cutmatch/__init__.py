"""NPN cut-class signatures for locked and unlocked gate-level netlists."""

from ._cutmatch import (
    Corpus,
    Error,
    Netlist,
    Signature,
    __version__,
    area_ratio,
    build_signature,
    compare,
    jaccard,
    label,
    lock,
    make_corpus,
    normalize,
    npn_canonical,
    run_repro,
)

__all__ = [
    "Corpus",
    "Error",
    "Netlist",
    "Signature",
    "__version__",
    "area_ratio",
    "build_signature",
    "compare",
    "jaccard",
    "label",
    "lock",
    "make_corpus",
    "normalize",
    "npn_canonical",
    "run_repro",
]
