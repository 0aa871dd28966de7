from django.apps import AppConfig


class ModactConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'modact'
    verbose_name = 'Module actions and operator matrices'
