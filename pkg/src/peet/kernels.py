"""Edit-distance kernel selection.

Imports the compiled extension when it was built, the pure-Python fallback
otherwise. ``PEET_PURE_PYTHON=1`` in the environment forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("PEET_PURE_PYTHON"):
    from peet import _editops_py as _impl

    BACKEND = "python"
else:
    try:
        from peet import _editops as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from peet import _editops_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

char_distance = _impl.char_distance
token_distance = _impl.token_distance
