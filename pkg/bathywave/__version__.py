VERSION = (0, 1, 0)

__version__ = ".".join(map(str, VERSION))

# alpha/beta/rc tags
__version_suffix__ = ""
