import os
from setuptools import setup, find_packages

lib_folder = os.path.dirname(os.path.realpath(__file__))

# get required packages from requirements.txt
requirement_path = os.path.join(lib_folder, 'requirements.txt')
install_requires = []
if os.path.isfile(requirement_path):
    with open(requirement_path) as f:
        install_requires = f.read().splitlines()

setup(name='twisted_phase_space',
      version='0.0.1',
      description='Twisted Poincare and Galilean phase spaces: coproducts, Heisenberg doubles, contractions and uncertainty bounds.',
      license='',
      packages=find_packages(include=['twisted_phase_space', 'twisted_phase_space.*']),
      install_requires=install_requires,
      python_requires='>=3.8',
      zip_safe=False)
