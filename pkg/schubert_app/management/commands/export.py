# schubert_app/management/commands/export.py
"""Export a Bruhat poset or a structure-constant table.

Usage:
    python manage.py export poset --n 3 --format dot
    python manage.py export poset --d 2 --n 4 --format json --output gr24.json
    python manage.py export table --n 3 --theory K --output k3.json

Output is canonical: identical inputs and engine version give identical bytes.
"""

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from schubert_app import grassmann, weyl
from schubert_app.cli import FAILURE, USAGE_ERROR, add_window_arguments, engine_errors, window_guard
from schubert_app.serializers import PosetSerializer, canonical_json, to_dot
from schubert_app.tables import build_payload, compute_table


class Command(BaseCommand):
    help = "Export a poset (DOT or JSON) or a structure-constant table (JSON)"

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=['poset', 'table'])
        parser.add_argument('--n', type=int, required=True, help='Window n')
        parser.add_argument('--d', type=int, help='Export the poset of Gr(d, n) instead of S_n')
        parser.add_argument('--theory', choices=['H', 'K'], default='H', help='Table theory')
        parser.add_argument('--route', choices=['reduced', 'stable'], help='Product route')
        parser.add_argument('--format', dest='fmt', choices=['dot', 'json'], default='json')
        parser.add_argument('--output', type=Path, help='Target file (default: stdout)')
        add_window_arguments(parser)

    def handle(self, *args, **options):
        n = options['n']
        window_guard(n, options)
        with engine_errors():
            if options['kind'] == 'poset':
                text = self.render_poset(n, options)
            else:
                if options['fmt'] != 'json':
                    raise CommandError("tables export as JSON only", returncode=USAGE_ERROR)
                table = compute_table(options['theory'], n, options.get('route'))
                text = canonical_json(build_payload(options['theory'], n, table))

        output = options.get('output')
        if output is None:
            self.stdout.write(text, ending="")
            return
        try:
            output.parent.mkdir(parents=True, exist_ok=True)
            output.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CommandError(f"Could not write {output}: {exc}", returncode=FAILURE) from exc
        self.stdout.write(self.style.SUCCESS(f"Wrote {options['kind']} export to {output}"))

    def render_poset(self, n, options):
        d = options.get('d')
        if d is None:
            poset, name = weyl.bruhat_poset(n), f"bruhat_S{n}"
        else:
            poset, name = grassmann.grass_poset(d, n), f"grassmannian_{d}_{n}"
        if options['fmt'] == 'dot':
            return to_dot(poset, name)
        return canonical_json(PosetSerializer(poset).data)
