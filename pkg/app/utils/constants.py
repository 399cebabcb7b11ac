import os

CONSOLE_WIDTH = 100

# exhaustive subset enumeration stays sub-second up to 2^16 subsets
DEFAULT_ORACLE_LIMIT = 16
# the full EFB table has 2^{4m} entries
DEFAULT_TABLE_LIMIT = 5
DEFAULT_GAMMA_BENCH_LIMIT = 5
DEFAULT_EFB_BENCH_LIMIT = 7
DEFAULT_VERIFY_SAMPLES = 500
DEFAULT_SEED = 2009

# exhaustive basis pairs up to this m, sampled pairs above it
EXHAUSTIVE_VERIFY_LIMIT = 3

GRAPH_FORMATS = ("dimacs", "edgelist")
BASES = ("auto", "efb", "gamma")

ENV_PREFIX = "CLIFFOCK_"

THEME = {
    "primary": "#4566db",
    "secondary": "#9c79ee",
    "accent": "#88c5d0",
    "success": "#10b981",
    "warning": "#ebac40",
    "error": "#ef4444",
    "muted": "#6b7280",
    "text": "#f8fafc",
    "border": "#374151",
}

DEFAULT_PATHS = {
    "config": os.path.join(
        os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
        "config.json",
    ),
}
