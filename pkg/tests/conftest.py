from __future__ import annotations

import os
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# searches run by the tests write their cache here; lookups still fall back to the packaged cache
os.environ.setdefault("DESIGN_FIXTURE_DIR", tempfile.mkdtemp(prefix="hwdesign-cache-"))
