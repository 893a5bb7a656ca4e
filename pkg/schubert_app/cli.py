# schubert_app/cli.py
"""Argument types and error plumbing shared by the management commands."""

import argparse
import logging
from contextlib import contextmanager

from django.core.management.base import CommandError

from .conf import max_window
from .exceptions import InvariantViolation, SchubertError
from .serializers import canonical_json
from .weyl import Permutation, Weight

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
FAILURE = 1


def permutation_arg(text):
    try:
        return Permutation.from_string(text)
    except SchubertError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def weight_arg(text):
    try:
        return Weight.from_string(text)
    except SchubertError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def add_window_arguments(parser):
    parser.add_argument(
        '--max-window',
        type=int,
        dest='max_window',
        help='Largest n accepted without --allow-large (default: SCHUBERT_MAX_WINDOW)',
    )
    parser.add_argument(
        '--allow-large',
        action='store_true',
        dest='allow_large',
        help='Accept windows above the guard',
    )


def window_guard(n, options):
    limit = options.get('max_window') or max_window()
    if n is not None and n > limit and not options.get('allow_large'):
        raise CommandError(
            f"n={n} is above the window guard ({limit}); pass --allow-large to proceed",
            returncode=USAGE_ERROR,
        )


def resolve_window(options, *perms):
    """The common window of the given permutations, checked against --n."""
    windows = {p.window for p in perms if p is not None}
    n = options.get('n')
    if n is not None:
        windows.add(n)
    if len(windows) != 1:
        raise CommandError(
            f"permutations and --n disagree on the window: {sorted(windows)}",
            returncode=USAGE_ERROR,
        )
    n = windows.pop()
    window_guard(n, options)
    return n


@contextmanager
def engine_errors():
    """Turn engine errors into CommandError with exit status 1."""
    try:
        yield
    except InvariantViolation as exc:
        logger.warning("%s: %s", exc.__class__.__name__, exc.witness)
        raise CommandError(
            f"{exc.__class__.__name__}: {exc}\n{canonical_json(exc.witness)}", returncode=FAILURE
        ) from exc
    except SchubertError as exc:
        raise CommandError(f"{exc.__class__.__name__}: {exc}", returncode=FAILURE) from exc


def emit(command, data):
    command.stdout.write(canonical_json(data), ending="")
