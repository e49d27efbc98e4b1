from django.apps import AppConfig


class CongruencesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'congruences'
