"""
Capacity guardrails

Limits for the exhaustive decision procedures. Each one can be overridden
through the environment (or a .env file).
"""
import os

from dotenv import load_dotenv

load_dotenv()


def _limit(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


# Implication checking: reject when BOTH limits are exceeded
MAX_FORMULA_VARIABLES = _limit("GQV_MAX_FORMULA_VARIABLES", 8)
MAX_GRAPH_VERTICES = _limit("GQV_MAX_GRAPH_VERTICES", 8)

# forbidden_membership enumerates every vertex subset of the host graph
MAX_FORBIDDEN_HOST_VERTICES = _limit("GQV_MAX_FORBIDDEN_HOST_VERTICES", 8)

# Number of phi maps xi_family may generate
MAX_XI_FAMILY_SIZE = _limit("GQV_MAX_XI_FAMILY_SIZE", 4096)

# membership_hereditary_check enumerates every induced subgraph
MAX_HEREDITARY_VERTICES = _limit("GQV_MAX_HEREDITARY_VERTICES", 5)

# strong_homomorphic_images enumerates every partition of the vertex set
MAX_IMAGE_VERTICES = _limit("GQV_MAX_IMAGE_VERTICES", 8)
