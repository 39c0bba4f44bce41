import json

from ._core import (
    Graph,
    Graph6Error,
    GraphError,
    PreconditionError,
    chromatic_coloring,
    chromatic_number,
    clique_minor,
    clique_number,
    enumerate_alpha2,
    enumerate_triangle_free,
    families,
    find_induced,
    hadwiger_number,
    independence_number,
    max_matching,
    maximum_clique,
    random_alpha2,
    remark6_check,
    revalidate_json,
    sample_seed,
    seagull_condition,
    theorem2_check,
    validate_minor,
    verify_json,
)

__version__ = "0.1.0"


def verify(g, minor_check_max_n=14, minor_budget=None):
    """Run the pipeline on g and return the certificate as a dict."""
    return json.loads(verify_json(g, minor_check_max_n, minor_budget))


def revalidate(certificate):
    """Failures found when re-checking a certificate (dict or JSON text); empty when valid."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return revalidate_json(certificate)
