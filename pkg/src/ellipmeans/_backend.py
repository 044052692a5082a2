"""Selects the AGM kernel backend at import time.

The compiled extension is preferred; the pure-Python kernel is the
fallback when the extension was not built.  Setting the environment
variable ``ELLIPMEANS_FORCE_PYBACKEND=1`` before import forces the pure
kernel (used by the benchmark and by CI to exercise the fallback); it
does not change any numerical contract, only speed.
"""

import os

from . import _agm_py

ellip_ke_py = _agm_py.ellip_ke

if os.environ.get("ELLIPMEANS_FORCE_PYBACKEND") == "1":
    ellip_ke_compiled = None
else:
    try:
        from . import _agm_cy

        ellip_ke_compiled = _agm_cy.ellip_ke
    except ImportError:
        ellip_ke_compiled = None

if ellip_ke_compiled is not None:
    ellip_ke = ellip_ke_compiled
    BACKEND = "compiled"
else:
    ellip_ke = ellip_ke_py
    BACKEND = "python"
