from pathlib import Path


def resource_path(relative_path: str) -> Path:
    """ Get absolute path to a bundled resource. Assumes that this script is located in the package directory. """
    return Path(__file__).resolve().parent / relative_path


def fixtures_path() -> Path:
    return resource_path('fixtures')
