# schubert_app/tables.py
"""Build, store, load and garbage-collect structure-constant tables.

Rows live in the ``tables`` database (see ``TablesRouter``). Every write
happens inside ``transaction.atomic`` while a lock file in the cache
directory is held, so two writers cannot interleave.
"""

import hashlib
import json
import logging
import os
from contextlib import contextmanager
from pathlib import Path

from django.conf import settings
from django.db import transaction

from . import ENGINE_VERSION, cohomology, ktheory
from .exceptions import CacheLocked, ChecksumMismatch
from .models import TableCache
from .serializers import TablePayloadSerializer, canonical_json, table_entries, table_from_entries

logger = logging.getLogger(__name__)

CHECKSUM_ALGORITHM = "sha256"
LOCK_NAME = "tables.lock"
BASIS_TAGS = {"H": "schubert", "K": "O"}


def cache_dir():
    directory = Path(settings.SCHUBERT_CACHE_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


@contextmanager
def cache_lock(directory=None):
    lock = Path(directory or cache_dir()) / LOCK_NAME
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError as exc:
        raise CacheLocked(f"{lock} exists; another cache writer is running") from exc
    try:
        os.write(fd, str(os.getpid()).encode())
        os.close(fd)
        yield lock
    finally:
        lock.unlink(missing_ok=True)


def compute_table(theory, n, route=None):
    if theory == "H":
        return cohomology.structure_constants(n, route)
    if theory == "K":
        return ktheory.structure_constants_k(n, route)
    raise ValueError(f"unknown theory {theory!r}")


def build_payload(theory, n, table):
    data = TablePayloadSerializer({
        "theory": theory,
        "window": n,
        "basis": BASIS_TAGS[theory],
        "engine_version": ENGINE_VERSION,
        "entries": table_entries(table),
    }).data
    return json.loads(canonical_json(data))


def payload_checksum(payload):
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def store_table(theory, n, route=None, using="tables"):
    table = compute_table(theory, n, route)
    payload = build_payload(theory, n, table)
    with cache_lock():
        with transaction.atomic(using=using):
            row, created = TableCache.objects.using(using).update_or_create(
                theory=theory,
                window=n,
                basis=BASIS_TAGS[theory],
                engine_version=ENGINE_VERSION,
                defaults={
                    "payload": payload,
                    "checksum": payload_checksum(payload),
                    "checksum_algorithm": CHECKSUM_ALGORITHM,
                    "entry_count": len(payload["entries"]),
                },
            )
    logger.info("%s %s", "stored" if created else "replaced", row)
    return row


def load_table(theory, n, using="tables"):
    """The stored table as {(v, w): {x: c}}, after checksum and schema checks."""
    row = TableCache.objects.using(using).get(
        theory=theory, window=n, basis=BASIS_TAGS[theory], engine_version=ENGINE_VERSION
    )
    if row.checksum_algorithm != CHECKSUM_ALGORITHM:
        raise ChecksumMismatch(f"{row} uses unsupported checksum {row.checksum_algorithm!r}")
    if payload_checksum(row.payload) != row.checksum:
        raise ChecksumMismatch(f"{row} does not match its stored checksum")
    serializer = TablePayloadSerializer(data=row.payload)
    if not serializer.is_valid():
        raise ChecksumMismatch(f"{row} payload is malformed: {serializer.errors}")
    logger.info("loaded %s (%d entries)", row, row.entry_count)
    return table_from_entries(serializer.validated_data["entries"])


def stale_tables(using="tables"):
    return TableCache.objects.using(using).exclude(engine_version=ENGINE_VERSION)


def gc_tables(using="tables", dry_run=False):
    """Remove rows written by other engine versions; returns their labels."""
    stale = stale_tables(using)
    labels = [str(row) for row in stale]
    if labels and not dry_run:
        with cache_lock():
            with transaction.atomic(using=using):
                stale.delete()
        logger.info("removed %d stale tables", len(labels))
    return labels
