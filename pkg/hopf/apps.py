from django.apps import AppConfig


class HopfConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hopf'
    verbose_name = 'Hopf structure maps and axiom checks'
