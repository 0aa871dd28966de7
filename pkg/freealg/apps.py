from django.apps import AppConfig


class FreealgConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'freealg'
    verbose_name = 'PBW algebra arithmetic'
