from django.apps import AppConfig


class InduceConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'induce'
    verbose_name = 'Induced representations and classical limits'
