import os
import pathlib
import sys

# Tests import programs by module name: corpus/programs by default, or another
# directory (a watermarked copy, say) named by DUALMARK_PROGRAMS.
sys.path.insert(0, os.environ.get("DUALMARK_PROGRAMS", str(pathlib.Path(__file__).resolve().parent.parent / "programs")))
