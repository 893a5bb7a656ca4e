# schubert_app/management/commands/cache.py
"""Manage the structure-constant table cache in the 'tables' database.

Usage:
    python manage.py cache build --n 4
    python manage.py cache load --n 3 --theory K
    python manage.py cache gc --dry-run
"""

from django.core.management import call_command
from django.core.management.base import BaseCommand, CommandError

from schubert_app import ENGINE_VERSION
from schubert_app.cli import FAILURE, add_window_arguments, engine_errors, window_guard
from schubert_app.models import TableCache
from schubert_app.tables import cache_dir, compute_table, gc_tables, load_table, store_table


class Command(BaseCommand):
    help = "Build, verify or clean the structure-constant table cache"

    def add_arguments(self, parser):
        # --n would otherwise abbreviate --no-color
        parser.allow_abbrev = False
        subparsers = parser.add_subparsers(dest='action', required=True)

        build = subparsers.add_parser('build', help='Compute and store tables for S_1..S_n')
        build.add_argument('--n', type=int, required=True)
        build.add_argument('--theory', choices=['H', 'K', 'both'], default='both')
        build.add_argument('--route', choices=['reduced', 'stable'])

        load = subparsers.add_parser('load', help='Load a table and check it')
        load.add_argument('--n', type=int, required=True)
        load.add_argument('--theory', choices=['H', 'K'], default='H')
        load.add_argument('--recompute', action='store_true',
                          help='Also compare against a fresh computation')

        gc = subparsers.add_parser('gc', help='Delete tables from other engine versions')
        gc.add_argument('--dry-run', action='store_true', dest='dry_run')

        for sub in (build, load, gc):
            sub.add_argument('--database', default='tables', help='Database alias (default: tables)')
        for sub in (build, load):
            add_window_arguments(sub)

    def handle(self, *args, **options):
        using = options['database']
        cache_dir()
        call_command('migrate', 'schubert_app', database=using, verbosity=0)
        with engine_errors():
            getattr(self, f"handle_{options['action']}")(using, options)

    def handle_build(self, using, options):
        n = options['n']
        window_guard(n, options)
        theories = ['H', 'K'] if options['theory'] == 'both' else [options['theory']]
        for window in range(1, n + 1):
            for theory in theories:
                row = store_table(theory, window, options.get('route'), using=using)
                self.stdout.write(self.style.SUCCESS(f"Stored {row} with {row.entry_count} entries"))

    def handle_load(self, using, options):
        n, theory = options['n'], options['theory']
        window_guard(n, options)
        try:
            table = load_table(theory, n, using=using)
        except TableCache.DoesNotExist:
            raise CommandError(
                f"No {theory} table for S_{n} at engine version {ENGINE_VERSION}; run 'cache build'",
                returncode=FAILURE,
            )
        if options['recompute']:
            fresh = {key: {x: c for x, c in products.items() if c}
                     for key, products in compute_table(theory, n).items()}
            fresh = {key: products for key, products in fresh.items() if products}
            if fresh != table:
                raise CommandError(f"Stored {theory} table for S_{n} differs from a fresh computation",
                                   returncode=FAILURE)
        entries = sum(len(products) for products in table.values())
        self.stdout.write(self.style.SUCCESS(f"Loaded {theory} table for S_{n}: {entries} entries, checksum ok"))

    def handle_gc(self, using, options):
        labels = gc_tables(using=using, dry_run=options['dry_run'])
        if not labels:
            self.stdout.write("No stale tables")
            return
        verb = "Would remove" if options['dry_run'] else "Removed"
        for label in labels:
            self.stdout.write(f"{verb} {label}")
        self.stdout.write(self.style.SUCCESS(f"{verb} {len(labels)} stale table(s)"))
