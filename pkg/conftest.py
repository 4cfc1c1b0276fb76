from test_utils.boot_django import boot_django

boot_django()
