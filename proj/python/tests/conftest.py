import glob
import json
import os
import pathlib
import sys

import pytest

# ctest points this at build/python; an editable install's import hook would
# otherwise shadow the fresh build.
_BUILD = os.environ.get("ALGENTROPY_PYTHON_DIR")
if _BUILD:
    sys.path.insert(0, _BUILD)
    sys.meta_path[:] = [f for f in sys.meta_path if "algentropy" not in type(f).__module__]

ROOT = pathlib.Path(os.environ.get("ALGENTROPY_ROOT", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    schemas = {}
    for f in glob.glob(str(ROOT / "docs" / "schemas" / "*.json")):
        with open(f, encoding="utf-8") as fh:
            schemas[pathlib.Path(f).name] = json.load(fh)
    registry = referencing.Registry().with_resources(
        [(s["$id"], referencing.Resource.from_contents(s)) for s in schemas.values()]
    )

    def check(schema, doc):
        v = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
        errors = [e.message for e in v.iter_errors(doc)]
        assert not errors, errors[:3]

    return check
