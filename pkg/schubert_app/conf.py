# schubert_app/conf.py
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "product_route": "reduced",
    "grothendieck_degree_factor": 2,
    "ambient_cap": 12,
    "reduced_word_limit": 10_000,
    "cone_fit_window": 6,
    "cone_check_points": 5,
    "cone_retry_cap": 4,
    "random_seed": 20240601,
    "sample_count": 100,
    "sample_triples": 10_000,
}


def engine_setting(name):
    """Return ``settings.SCHUBERT_CALC[name]`` or the built-in default."""
    try:
        overrides = getattr(settings, "SCHUBERT_CALC", {})
    except ImproperlyConfigured:
        # Engine modules are importable without a configured project
        overrides = {}
    return overrides.get(name, DEFAULTS[name])


def max_window():
    try:
        return int(getattr(settings, "SCHUBERT_MAX_WINDOW", 6))
    except ImproperlyConfigured:
        return 6
