import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schemas():
    base = pathlib.Path(os.environ.get("RICHARDSON_SCHEMAS", ROOT / "schemas"))
    return {
        name: json.loads((base / f"{name}.schema.json").read_text())
        for name in ("record", "export_record")
    }


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("RICHARDSON_CLI", str(ROOT / "build" / "richardson"))
    if not pathlib.Path(exe).exists():
        pytest.skip(f"command line tool not built at {exe}")

    def run(*args):
        return subprocess.run([exe, *args], capture_output=True, text=True, check=False)

    return run
