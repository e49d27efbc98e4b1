from django.apps import AppConfig


class EnumerationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'enumeration'
