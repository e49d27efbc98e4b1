from django.apps import AppConfig


class ModelfileConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'modelfile'
