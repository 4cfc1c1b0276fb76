from django.apps import AppConfig


class ArofTtdConfig(AppConfig):
    name = "arof_ttd"
    verbose_name = "A-RoF true-time-delay beamforming"
