from django.apps import AppConfig


class DualityConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'duality'
