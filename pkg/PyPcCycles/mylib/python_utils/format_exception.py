import traceback

from colorama import Fore, Style


def format_exception_ansi_colors(e: BaseException) -> str:
    """
    Formats the given exception with its traceback in ANSI colors for better readability.

    Args:
        e (BaseException): The exception to be formatted.

    Returns:
        str: The formatted stacktrace with ANSI colors.
    """
    exception_info = "".join(traceback.format_exception_only(type(e), e))
    traceback_info = "".join(traceback.format_tb(e.__traceback__))
    lines = (traceback_info + exception_info).split("\n")

    formatted_lines = []
    for line in lines:
        if line.lstrip().startswith("File "):
            # Path and line number in blue, function name in green
            location, _, function = line.partition(" in ")
            line = Fore.BLUE + location + Style.RESET_ALL
            if function:
                line += " in " + Fore.GREEN + function + Style.RESET_ALL
        elif "Error" in line or "Exception" in line:
            line = Style.BRIGHT + Fore.RED + line + Style.RESET_ALL
        elif "^" in line:
            line = Fore.YELLOW + line + Style.RESET_ALL
        formatted_lines.append(line)

    return "\n".join(formatted_lines)


def format_error_message(message: str, color: bool = True) -> str:
    """ One-line diagnostic for the command line, red when `color` is set. """
    text = f"error: {message}"
    return Style.BRIGHT + Fore.RED + text + Style.RESET_ALL if color else text
