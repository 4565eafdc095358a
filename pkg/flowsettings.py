from importlib.metadata import version

from decouple import config
from theflow.settings.default import *  # noqa

SUMMA_APP_VERSION = config("SUMMA_APP_VERSION", None)
if not SUMMA_APP_VERSION:
    try:
        SUMMA_APP_VERSION = version("summa")
    except Exception:
        SUMMA_APP_VERSION = "local"

SUMMA_LOG_LEVEL = config("SUMMA_LOG_LEVEL", default="WARNING")

# dense storage guard: refuse coefficient tensors above this many entries
SUMMA_TENSOR_BUDGET = config("SUMMA_TENSOR_BUDGET", default=10**8, cast=int)
# exact l_inf norms enumerate sign patterns of all slots but the last
SUMMA_ENUM_BUDGET = config("SUMMA_ENUM_BUDGET", default=2**22, cast=int)

# alternating ascent
SUMMA_RESTARTS = config("SUMMA_RESTARTS", default=32, cast=int)
SUMMA_MAX_ITERS = config("SUMMA_MAX_ITERS", default=200, cast=int)
SUMMA_TOL = config("SUMMA_TOL", default=1e-12, cast=float)
SUMMA_CONCURRENT = config("SUMMA_CONCURRENT", default=True, cast=bool)

# extremal families and probes
SUMMA_KSZ_DRAWS = config("SUMMA_KSZ_DRAWS", default=8, cast=int)
SUMMA_KSZ_SELECTION = config("SUMMA_KSZ_SELECTION", default="min")
SUMMA_GROWTH_THRESHOLD = config("SUMMA_GROWTH_THRESHOLD", default=0.05, cast=float)
SUMMA_GROWTH_FACTOR = config("SUMMA_GROWTH_FACTOR", default=2.0, cast=float)

# verification
SUMMA_HOLDS_TOL = config("SUMMA_HOLDS_TOL", default=1e-9, cast=float)
