import json
from enum import Enum
from unittest.mock import patch
import pytest
from pathlib import Path

from PyPcCycles.mylib.config.storage import *
from PyPcCycles.mylib.config.json_file_storage import *


@pytest.fixture
def temp_storage(tmp_path):

    return JsonFileStorage(str(tmp_path))


def write_json(path: Path, text: str) -> None:
    path.write_text(text, encoding='utf-8')


def test_init_storage_success(tmp_path):

    directory = tmp_path / "config"
    storage = JsonFileStorage(str(directory))
    assert storage.directory == directory
    assert directory.exists()


def test_init_storage_without_create(tmp_path):

    directory = tmp_path / "missing"
    JsonFileStorage(str(directory), create=False)
    assert not directory.exists()


def test_init_storage_failure(monkeypatch):

    def mock_mkdir(self, parents=True, exist_ok=True):
        raise OSError("Cannot create directory")

    monkeypatch.setattr(Path, "mkdir", mock_mkdir)

    with pytest.raises(StorageCreateDirectoryError):
        JsonFileStorage("/invalid/dir")


def test_load_json_success(temp_storage):

    write_json(temp_storage.directory / "test.json", '{"key": "value"}')
    assert temp_storage.load("test.json") == {"key": "value"}


def test_load_json_adds_extension(temp_storage):

    write_json(temp_storage.directory / "test.json", '{"key": 1}')
    assert temp_storage.load("test") == {"key": 1}
    assert temp_storage.exists("test")


def test_load_json_not_found(temp_storage):

    with pytest.raises(StorageItemNotFoundError):
        temp_storage.load("nonexistent.json")


def test_load_json_invalid(temp_storage):

    write_json(temp_storage.directory / "invalid.json", "{invalid json}")

    with pytest.raises(StorageItemLoadError):
        temp_storage.load("invalid.json")


def test_load_json_not_an_object(temp_storage):

    write_json(temp_storage.directory / "list.json", "[1, 2, 3]")

    with pytest.raises(StorageItemLoadError):
        temp_storage.load("list.json")


def test_list_json_files(temp_storage):

    filenames = ["file1.json", "file2.json", "file3.json"]
    for filename in filenames:
        write_json(temp_storage.directory / filename, "{}")
    write_json(temp_storage.directory / "other.txt", "")

    assert temp_storage.list() == filenames


@patch.object(Path, 'glob', side_effect=OSError("Cannot list files"))
def test_list_json_files_failure(mock_glob, temp_storage):
    with pytest.raises(StorageItemListingError):
        temp_storage.list()


class Color(Enum):
    RED = 1


def test_dump_json_is_deterministic():

    first = dump_json({"b": {3, 1, 2}, "a": Color.RED})
    second = dump_json({"a": Color.RED, "b": {2, 3, 1}})

    assert first == second
    assert json.loads(first) == {"a": "red", "b": [1, 2, 3]}
