from enum import Enum
import json
from pathlib import Path
from PyPcCycles.mylib.config.storage import *


class ReportJSONEncoder(json.JSONEncoder):
    """ JSON encoder for the value types that appear in configurations and run reports
    (enums are written by name, sets as sorted lists). """
    
    def default(self, obj):
        if isinstance(obj, Enum):
            return obj.name.lower()
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        return json.JSONEncoder.default(self, obj)


class JsonFileStorage(Storage[Dict[str, Any]]):
    """
    Read access to the JSON files of one directory, e.g. the user configuration directory.
    """

    def __init__(self, directory: str, create: bool = True) -> None:
        """
        Initialize a JsonFileStorage object from a directory path.

        Args:
            directory (str): The base directory where the JSON files are stored.
            create (bool): Whether to create the directory if it does not exist yet.

        Raises:
            StorageCreateDirectoryError: If the directory cannot be created.
        """
        self.directory = Path(directory)
        if create:
            try:
                self.directory.mkdir(parents=True, exist_ok=True)
            except Exception as e:
                raise StorageCreateDirectoryError(str(self.directory), "Could not create directory") from e


    def load(self, filename: str) -> Dict[str, Any]:
        """
        Load a JSON file from the storage directory.

        Args:
            filename (str): The name of the JSON file to load, the .json extension is optional.

        Returns:
            Dict[str, Any]: The loaded JSON data.

        Raises:
            StorageItemNotFoundError: If the specified file is not found.
            StorageItemLoadError: If the file is not valid JSON or does not contain an object.
        """
        filename = self._ensure_extension(filename)
        path = self.directory / filename
        try:
            with path.open('r', encoding='utf-8') as file:
                data = json.load(file)
        except FileNotFoundError as e:
            raise StorageItemNotFoundError(filename, "File not found") from e
        except Exception as e:
            raise StorageItemLoadError(filename, "Could not load JSON file") from e

        if not isinstance(data, dict):
            raise StorageItemLoadError(filename, "JSON file does not contain an object")
        return data


    def list(self) -> List[str]:
        """
        List all JSON files in the storage directory.

        Raises:
            StorageItemListingError: If the files in the directory cannot be listed.
        """
        try:
            return sorted(file.name for file in self.directory.glob('*.json'))
        except Exception as e:
            raise StorageItemListingError(str(self.directory), "Could not list files from directory") from e


    def exists(self, filename: str) -> bool:
        filename = self._ensure_extension(filename)
        return (self.directory / filename).exists()
    
    
    @staticmethod
    def _ensure_extension(filename: str) -> str:
        filename = Path(filename)
        return str(filename if filename.suffix.lower() == '.json' else filename.with_suffix('.json'))


def dump_json(data: Any) -> str:
    """
    Serialize data deterministically (sorted keys, fixed indentation), so that equal data
    always produces byte-identical text.
    """
    return json.dumps(data, indent=2, sort_keys=True, cls=ReportJSONEncoder)
