from setuptools import setup, find_packages

setup(
    name="hyperspec",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "python-dotenv==1.0.0",
        "pydantic>=1.10,<2.0",
        "numpy<2.0",
    ],
    extras_require={
        "test": [
            "pytest==7.4.3",
            "pytest-asyncio==0.21.1",
        ],
    },
    entry_points={
        "console_scripts": [
            "hyperspec=cli.main:main",
        ],
    },
)
