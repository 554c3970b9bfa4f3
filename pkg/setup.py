from setuptools import setup, find_packages


def long_description():
    with open('README.rst', 'r') as f:
        return f.read()


setup(
    name='forumlib',
    version='0.1.0',
    description='Goal-directed proof search and cut elimination for the Forum fragment of linear logic',
    long_description=long_description(),
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries',
    ],
    packages=find_packages(exclude=['docs', 'examples', 'examples/*', 'tests', 'tests/*']),
    keywords=['linear logic', 'Forum', 'proof search', 'cut elimination', 'logic programming'],
    python_requires='>=3.6',
    install_requires=['nltk', 'lark'],
    extras_require={'dev': [
        'coverage',
        'pycodestyle',
        'pytest',
    ]},
    entry_points={'console_scripts': ['forumlib = forumlib.cli:main']},
    zip_safe=True,
)
