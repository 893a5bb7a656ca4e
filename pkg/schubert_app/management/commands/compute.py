"""Compute one class, coefficient or constant and print it as canonical JSON.

Usage:
    python manage.py compute cup --n 3 --v 2,3,1 --w 3,1,2
    python manage.py compute kmul --v 2,1,3 --w 1,3,2
    python manage.py compute chevalley --weight 2,1,0 --w 3,1,2
    python manage.py compute kchevalley --weight 1,1,0 --w 3,2,1
    python manage.py compute convert --w 2,1,3 --source I --target O
    python manage.py compute dualize --w 1,2
    python manage.py compute mobius --n 3 --v 1,2,3 --w 3,2,1
    python manage.py compute lr --d 2 --n 4 --lam 1 --mu 1
    python manage.py compute pieri --n 4 --index 2,4 --mode L
    python manage.py compute hilbert --n 3 --j 2 --k -2
    python manage.py compute cone --d 4

Permutations are comma-separated one-line notation, weights comma-separated
integers. Classes use dimension indexing: [X_w] has dimension ℓ(w).
"""

from django.core.management.base import BaseCommand, CommandError

from schubert_app import cohomology, grassmann, ktheory, oracle_lab
from schubert_app.cli import (
    USAGE_ERROR,
    add_window_arguments,
    emit,
    engine_errors,
    permutation_arg,
    resolve_window,
    weight_arg,
    window_guard,
)
from schubert_app.serializers import (
    CoefficientMapSerializer,
    CohClassSerializer,
    ConeResultSerializer,
    HilbertPolySerializer,
    KClassSerializer,
    grass_terms,
    partition_terms,
)
from schubert_app.weyl import bruhat_leq


class Command(BaseCommand):
    help = "Compute a Schubert calculus quantity and print it as JSON"

    def add_arguments(self, parser):
        # --n and --v would otherwise abbreviate --no-color and --version
        parser.allow_abbrev = False
        subparsers = parser.add_subparsers(dest='operation', required=True)

        def operation(name, help_text, perms=(), weight=False, route=False):
            sub = subparsers.add_parser(name, help=help_text)
            sub.add_argument('--n', type=int, help='Window n of S_n')
            for perm in perms:
                sub.add_argument(f'--{perm}', type=permutation_arg, required=True,
                                 help='Permutation in one-line notation, e.g. 2,3,1')
            if weight:
                sub.add_argument('--weight', type=weight_arg, required=True,
                                 help='Weight as comma-separated integers, e.g. 2,1,0')
            if route:
                sub.add_argument('--route', choices=['reduced', 'stable'],
                                 help='Product route (default: SCHUBERT_CALC product_route)')
            add_window_arguments(sub)
            return sub

        operation('cup', 'Cup product [X_v]·[X_w]', perms=('v', 'w'), route=True)
        kmul = operation('kmul', 'K-theory product O_v·O_w', perms=('v', 'w'), route=True)
        kmul.add_argument('--basis', choices=['O', 'I'], default='O', help='Output basis')
        operation('chevalley', 'c_1(L_λ)·[X_w]', perms=('w',), weight=True)
        operation('kchevalley', '[L_λ]·O_w for dominant λ', perms=('w',), weight=True)
        convert = operation('convert', 'Change a basis element between O and I', perms=('w',))
        convert.add_argument('--source', choices=['O', 'I', 'O_opp', 'I_opp'], default='O')
        convert.add_argument('--target', choices=['O', 'I'], default='I')
        operation('dualize', 'Duality involution of O_w', perms=('w',))
        operation('mobius', 'Möbius function μ(v, w) of the Bruhat order', perms=('v', 'w'))

        lr = subparsers.add_parser('lr', help='Grassmannian structure constants')
        lr.add_argument('--d', type=int, required=True)
        lr.add_argument('--n', type=int, required=True)
        lr.add_argument('--lam', default='', help='Partition, e.g. 1 or 2,1')
        lr.add_argument('--mu', default='', help='Partition, e.g. 1 or 1,1')
        lr.add_argument('--theory', choices=['H', 'K'], default='H')
        lr.add_argument('--convention', choices=['codimension', 'dimension'], default='codimension')
        add_window_arguments(lr)

        pieri = subparsers.add_parser('pieri', help='Pieri products on Gr(d, n)')
        pieri.add_argument('--n', type=int, required=True)
        pieri.add_argument('--index', required=True, help='Multi-index i_1<…<i_d, e.g. 2,4')
        pieri.add_argument('--mode', choices=['cohomology', 'L', 'L_inverse', 'divisor'], default='L')
        add_window_arguments(pieri)

        hilbert = subparsers.add_parser('hilbert', help='χ(O_{P^j}(k)) in K(P^n)')
        hilbert.add_argument('--n', type=int, required=True)
        hilbert.add_argument('--j', type=int, required=True)
        hilbert.add_argument('--k', type=int, default=0)

        cone = subparsers.add_parser('cone', help='K-class of the cone over a degree-d curve')
        cone.add_argument('--d', type=int, required=True)

    def handle(self, *args, **options):
        handler = getattr(self, f"handle_{options['operation']}")
        with engine_errors():
            emit(self, handler(options))

    def handle_cup(self, options):
        v, w = options['v'], options['w']
        resolve_window(options, v, w)
        product = cohomology.cup(cohomology.schubert_class(v), cohomology.schubert_class(w),
                                 options.get('route'))
        return CohClassSerializer(product).data

    def handle_kmul(self, options):
        v, w = options['v'], options['w']
        resolve_window(options, v, w)
        product = ktheory.multiply(ktheory.k_class(v), ktheory.k_class(w), options.get('route'))
        return KClassSerializer(ktheory.to_basis(product, options['basis'])).data

    def handle_chevalley(self, options):
        w, weight = options['w'], options['weight']
        resolve_window(options, w)
        return CohClassSerializer(cohomology.chevalley_cup(weight, w)).data

    def handle_kchevalley(self, options):
        w, weight = options['w'], options['weight']
        n = resolve_window(options, w)
        return CoefficientMapSerializer({'window': n, 'terms': ktheory.k_chevalley(weight, w)}).data

    def handle_convert(self, options):
        w = options['w']
        resolve_window(options, w)
        source = ktheory.k_class(w, options['source'])
        return KClassSerializer(ktheory.to_basis(source, options['target'])).data

    def handle_dualize(self, options):
        w = options['w']
        resolve_window(options, w)
        return KClassSerializer(ktheory.dualize(ktheory.k_class(w))).data

    def handle_mobius(self, options):
        v, w = options['v'], options['w']
        resolve_window(options, v, w)
        return oracle_lab.mobius_recursive(v, w) if bruhat_leq(v, w) else 0

    def handle_lr(self, options):
        d, n = options['d'], options['n']
        window_guard(n, options)
        convention = options['convention']
        lam = grassmann.Partition.from_string(options['lam'], d, n, convention)
        mu = grassmann.Partition.from_string(options['mu'], d, n, convention)
        return partition_terms(grassmann.lr_coefficients(lam, mu, options['theory']))

    def handle_pieri(self, options):
        n = options['n']
        window_guard(n, options)
        index = grassmann.GrassIndex.from_string(options['index'], n)
        if options['mode'] == 'cohomology':
            return grass_terms(grassmann.pieri_divisor_cohomology(index))
        return grass_terms(grassmann.k_pieri(index, options['mode']))

    def handle_hilbert(self, options):
        if options['n'] < 0 or not 0 <= options['j'] <= options['n']:
            raise CommandError("--j must lie in 0..n for P^n", returncode=USAGE_ERROR)
        model = grassmann.projective_k_model(options['n'])
        j, k = options['j'], options['k']
        return {
            'n': options['n'],
            'j': j,
            'k': k,
            'euler': str(model.euler(j, k)),
            'hilbert': HilbertPolySerializer(model.linear_class(j, k)).data,
        }

    def handle_cone(self, options):
        if options['d'] < 3:
            raise CommandError("the cone family starts at d = 3", returncode=USAGE_ERROR)
        return ConeResultSerializer(oracle_lab.cone_counterexample(options['d'])).data
