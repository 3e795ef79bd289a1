import os

os.system("coverage run --source haarpy -m pytest")
os.system("coverage report --skip-covered -m")
