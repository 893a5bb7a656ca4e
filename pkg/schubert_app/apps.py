from django.apps import AppConfig


class SchubertAppConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'schubert_app'
    verbose_name = 'Schubert calculus'
