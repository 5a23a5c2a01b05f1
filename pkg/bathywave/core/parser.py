import argparse
import inspect
import typing
from inspect import signature


def _flag_type(annotation):
    """Scalar type of an annotation, unwrapping ``Optional``; ``None`` when not a scalar."""
    if typing.get_origin(annotation) is typing.Union:
        args = [a for a in typing.get_args(annotation) if a is not type(None)]
        if len(args) != 1:
            return None
        annotation = args[0]
    if annotation is bool:
        return str2bool
    if annotation in (int, float, str):
        return annotation
    return None


def add_arguments_from_signature(parser, obj, prefix="", exclude=[], dest_prefix=""):
    """Add arguments to parser base on obj default keyword parameters.

    Only scalar parameters (``int``, ``float``, ``str``, ``bool`` and their ``Optional``
    forms) become flags. Flags default to ``argparse.SUPPRESS`` so that only the flags
    given on the command line show up in the parsed namespace and override the
    configuration file.

    :meta private:

    Args:
        parser (ArgumentParser)): the argument parser to which we want to add arguments.
        obj (type): the class from which we want to extract default parameters for the constructor.
        prefix (str, optional): prefix of the flag names.
        exclude (list, optional): parameter names to skip.
        dest_prefix (str, optional): prefix of the namespace attributes, such as ``"train."``.

    Returns:
        list: the names of the parameters which became flags.
    """
    sig = signature(obj)
    prefix = f"{prefix}-" if len(prefix) > 0 else ""
    added_arguments = []

    for p_name, p in sig.parameters.items():
        if p_name in exclude or p.kind != inspect.Parameter.POSITIONAL_OR_KEYWORD:
            continue

        flag_type = _flag_type(p.annotation)
        if flag_type is None:
            continue

        arg_format = f"--{prefix}{p_name.replace('_', '-')}"
        arg_kwargs = {
            "help": "",
            "type": flag_type,
            "dest": f"{dest_prefix}{p_name}",
            "default": argparse.SUPPRESS,
        }
        arg_kwargs["help"] += f"Type[{getattr(p.annotation, '__name__', str(p.annotation))}]. "
        if p.default is not inspect.Parameter.empty:
            arg_kwargs["help"] += f"Defaults to '{str(p.default)}'. "

        parser.add_argument(arg_format, **arg_kwargs)
        added_arguments.append(p_name)

    return added_arguments


def pop_prefixed(kwargs: dict, dest_prefix: str) -> dict:
    """Remove and return the entries of ``kwargs`` whose key starts with ``dest_prefix``, without the prefix.

    :meta private:
    """
    keys = [k for k in kwargs if k.startswith(dest_prefix)]
    return {k[len(dest_prefix) :]: kwargs.pop(k) for k in keys}


def str2bool(v):
    """
    :meta private:
    """
    if isinstance(v, bool):
        return v
    if v.lower() in ("yes", "true", "t", "y", "1"):
        return True
    elif v.lower() in ("no", "false", "f", "n", "0"):
        return False
    else:
        raise argparse.ArgumentTypeError("Boolean value expected.")
