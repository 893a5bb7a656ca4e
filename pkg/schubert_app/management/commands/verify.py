# schubert_app/management/commands/verify.py
"""Run verification suites and print their reports as JSON.

Usage:
    python manage.py verify duality --n 4
    python manage.py verify signs mobius --n 3 --workers 2
    python manage.py verify cone --dmax 8
    python manage.py verify all

Exit status is 0 when every suite passes and 1 otherwise.
"""

from django.core.management.base import BaseCommand, CommandError

from schubert_app.cli import FAILURE, add_window_arguments, emit, engine_errors, window_guard
from schubert_app.serializers import ReportSerializer
from schubert_app.verification import SUITES, run_suites


class Command(BaseCommand):
    help = "Run verification suites against the engine"

    def add_arguments(self, parser):
        parser.add_argument(
            'suites',
            nargs='+',
            choices=sorted(SUITES) + ['all'],
            help='Suites to run, or "all"',
        )
        parser.add_argument('--n', type=int, help='Window for suites that take one')
        parser.add_argument('--dmax', type=int, help='Largest curve degree for the cone suite')
        parser.add_argument('--samples', type=int, help='Random samples for sampled checks')
        parser.add_argument('--seed', type=int, help='Random seed (default: SCHUBERT_CALC random_seed)')
        parser.add_argument('--route', choices=['reduced', 'stable'], help='Product route')
        parser.add_argument('--workers', type=int, default=1, help='Processes to fan suites out over')
        add_window_arguments(parser)

    def handle(self, *args, **options):
        names = sorted(SUITES) if 'all' in options['suites'] else options['suites']
        window_guard(options.get('n'), options)
        with engine_errors():
            reports = run_suites(
                names,
                workers=max(options['workers'], 1),
                n=options.get('n'),
                dmax=options.get('dmax'),
                samples=options.get('samples'),
                seed=options.get('seed'),
                route=options.get('route'),
            )
        emit(self, ReportSerializer(reports, many=True).data)
        failed = [report.suite for report in reports if not report.passed]
        if failed:
            raise CommandError(f"Verification failed: {', '.join(failed)}", returncode=FAILURE)
        self.stderr.write(self.style.SUCCESS(f"{len(reports)} suite(s) passed"))
