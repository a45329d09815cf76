from glob import glob
from pathlib import Path

from fordspheres.cli import SUITES

DEMOS = sorted(glob("demos/*.py"))
DEMO_PAGES = [str(Path(demo).with_suffix(".rst")) for demo in DEMOS]
PACKAGE = sorted(glob("fordspheres/*.py"))


def task_demos():
    """literate demo scripts to reStructuredText"""
    for demo, page in zip(DEMOS, DEMO_PAGES):
        yield {
            "name": Path(demo).stem,
            "targets": [page],
            "file_dep": [demo, "to_rst.py"],
            "actions": [f"python3 to_rst.py {demo} > {page}"],
            "clean": True,
        }


def task_readme():
    """README.md to README.rst for the docs front page"""
    return {
        "file_dep": ["README.md"],
        "targets": ["README.rst"],
        "actions": ["pandoc -o README.rst README.md"],
    }


def task_docs():
    """sphinx site with the demos and the API reference"""
    return {
        "file_dep": DEMO_PAGES + PACKAGE + ["conf.py", "index.rst", "README.rst"],
        "actions": ["sphinx-build -q . website"],
        "targets": ["website/index.html"],
        "verbosity": 2,
    }


def task_test():
    """unit tests"""
    return {
        "file_dep": PACKAGE + sorted(glob("test/test_*.py")),
        "actions": ["python3 -m unittest discover -s test"],
        "verbosity": 2,
    }


def task_verify():
    """fordspheres verify, one subtask per suite at the default bounds"""
    for suite in SUITES:
        yield {
            "name": suite,
            "file_dep": PACKAGE,
            "actions": [f"fordspheres verify --suite {suite}"],
            "verbosity": 2,
        }
