import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    """Read an integer setting, falling back to the default on blank values."""
    value = os.getenv(name, '').strip()
    return int(value) if value else default


# Global override for every vertex-count guard (unset = use the per-guard values)
SGACH_MAX_N = os.getenv('SGACH_MAX_N', '').strip()


def _vertex_guard(name: str, default: int) -> int:
    if SGACH_MAX_N:
        return int(SGACH_MAX_N)
    return _int_env(name, default)


# Exhaustive solver guards
PSI2_MAX_N = _vertex_guard('SGACH_PSI2_MAX_N', 12)
PSIS_MAX_N = _vertex_guard('SGACH_PSIS_MAX_N', 10)
CLASS_MAX_N = _vertex_guard('SGACH_CLASS_MAX_N', 10)
GRAPH_MAX_EDGES = _int_env('SGACH_GRAPH_MAX_EDGES', 14)
SIGNED_GRAPH_MAX_EDGES = _int_env('SGACH_SIGNED_GRAPH_MAX_EDGES', 10)

# Pair checks and gadget construction
CLIQUE_MAX_N = _vertex_guard('SGACH_CLIQUE_MAX_N', 20000)
GADGET_MAX_N = _vertex_guard('SGACH_GADGET_MAX_N', 200000)
DIAMOND_MAX_N = _vertex_guard('SGACH_DIAMOND_MAX_N', 2000)
THREE_PARTITION_MAX_M = _int_env('SGACH_THREE_PARTITION_MAX_M', 3)

# Runtime
WORKERS = _int_env('SGACH_WORKERS', 1)
LOG_LEVEL = os.getenv('SGACH_LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
