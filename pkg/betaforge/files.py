import os
import os.path
import tempfile
from ovos_utils.log import LOG


def ensure_directory_exists(directory, domain=None):
    """ Create a directory if needed

    Args:
        directory (str): directory to create
        domain (str): optional subdirectory

    Returns:
        str: a path to the directory
    """
    if domain:
        directory = os.path.join(directory, domain)
    directory = os.path.normpath(directory or ".")

    if not os.path.isdir(directory):
        try:
            os.makedirs(directory)
        except OSError:
            LOG.error("Failed to create: " + directory)
    return directory


def atomic_write(filename, text):
    """ Write text to filename without ever leaving a partial file behind.

    The data goes to a temporary file in the destination directory first
    and is then renamed over the target.

        Args:
            filename: Path to the file to be written
            text: file contents
    """
    directory = ensure_directory_exists(os.path.dirname(filename))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".betaforge-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, filename)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    LOG.debug("wrote " + filename)
    return filename
