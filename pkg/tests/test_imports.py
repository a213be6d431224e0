import subprocess
import sys

import pytest


@pytest.mark.parametrize(
    "module",
    [
        "darbouxverifier.darboux",
        "darbouxverifier.darboux.integrability",
        "darbouxverifier.stieltjes",
        "darbouxverifier.substitution",
        "darbouxverifier.functions",
        "darbouxverifier.partition",
        "darbouxverifier.aux.arguments",
        "darbouxverifier.cmd.common",
    ],
)
def test_module_imports_first(module):
    # a fresh interpreter, so no other package has been imported before `module`
    result = subprocess.run(
        [sys.executable, "-c", "import {}".format(module)], capture_output=True, text=True
    )
    assert result.returncode == 0, result.stderr
