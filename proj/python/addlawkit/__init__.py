"""Complete addition laws on curve models over small finite fields.

Thin Python facade over the compiled core: curves and fields are passed as
strings (``"weierstrass:7:0,0,0,1,1"``, ``"edwards:13:2"``,
``"hyper:7:1,0,0,0,0,1"``; fields like ``"7"``, ``"13^2"``), results come
back as plain dicts and lists mirroring the command-line tool's certificate
JSON.
"""

from ._core import (
    AddlawError,
    __version__,
    certify,
    construct_complete,
    embedding_dimension,
    field_info,
    g2_counts,
    hyperplane_family,
    law_space,
    scan_ec,
    scan_g2,
    stored_law_names,
    theta_pipeline,
    validate,
    witness,
)

__all__ = [
    "AddlawError",
    "__version__",
    "certify",
    "construct_complete",
    "embedding_dimension",
    "field_info",
    "g2_counts",
    "hyperplane_family",
    "law_space",
    "scan_ec",
    "scan_g2",
    "stored_law_names",
    "theta_pipeline",
    "validate",
    "witness",
]
