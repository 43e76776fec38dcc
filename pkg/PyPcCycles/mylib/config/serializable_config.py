import logging
import numbers
from enum import Enum
from typing import Any

logger = logging.getLogger(__name__)


class SerializableConfig:
    """
    Base class for configuration objects that can be serialized to/from dictionaries.
    Public attributes are the serialized state, attributes starting with '_' are private.

    Merging only updates attributes that already exist, so configuration files written by
    other versions never add unknown attributes. Type mismatches are coerced where a lossless
    conversion exists (e.g. "7" -> 7) and ignored otherwise.
    """
        
    def to_dict(self) -> dict:
        """
        Convert the public attributes to a dictionary.
        Recursively converts nested SerializableConfig objects.
        """
        result = {}
        for key, value in self.__dict__.items():
            if not key.startswith('_'):
                if isinstance(value, SerializableConfig):
                    result[key] = value.to_dict()
                else:
                    result[key] = value
        return result
             
    def merge_dict(self, source: dict, path: str = '') -> None:
        """
        Update the instance with the values from a dictionary.
        Nested SerializableConfig objects are merged into rather than replaced.

        Args:
            source (dict): Dictionary containing values to merge into this instance.
            path (str): Dotted path of this object, used for log messages of nested merges.
        """
        for key, value in source.items():
            key_path = f"{path}.{key}" if path else key

            if key.startswith('_') or key not in self.__dict__:
                logger.debug(f"Ignoring unknown configuration key '{key_path}'")
                continue

            current_value = getattr(self, key)
            if isinstance(current_value, SerializableConfig):
                if isinstance(value, dict):
                    current_value.merge_dict(value, key_path)
                else:
                    logger.warning(f"Configuration key '{key_path}' expects an object, ignoring {value!r}")
                continue

            setattr(self, key, coerce_config_value(key_path, current_value, value))


def coerce_config_value(path: str, target: Any, source: Any) -> Any:
    """
    Return `source` converted to the type of `target`, or `target` if no sensible conversion exists.
    A `None` target (an optional value without default) accepts any scalar source. Never raises.
    """
    if source is None or target is None:
        return source

    if type(target) == type(source):
        return source

    try:
        if isinstance(target, Enum):
            if isinstance(source, str):
                return type(target)[source.upper()]

        elif isinstance(target, bool):
            if isinstance(source, str) and source.strip().lower() in ('true', 'false'):
                return source.strip().lower() == 'true'

        elif isinstance(target, int) and isinstance(source, (str, numbers.Integral)) and not isinstance(source, bool):
            return int(source)

        elif isinstance(target, float) and isinstance(source, (str, numbers.Real)) and not isinstance(source, bool):
            return float(source)

        elif isinstance(target, str) and isinstance(source, (numbers.Number, bool)):
            return str(source)

    except (KeyError, ValueError) as e:
        logger.warning(f"Configuration type mismatch cannot be handled at '{path}': {e}")
        return target

    logger.warning(f"Configuration type mismatch at '{path}': {type(target).__name__} vs {type(source).__name__}, keeping {target!r}")
    return target
