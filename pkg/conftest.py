import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "tensym.settings")
django.setup()
