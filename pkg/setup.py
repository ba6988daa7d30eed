from setuptools import setup
from squeezing import commandline_parser
from pathlib import Path
if commandline_parser.DEBUG:
	message = "The scripts are currently in debug mode!"
	raise ValueError(message)
FOLDER = Path(__file__).parent
README = FOLDER / "README.md"

with README.open() as readmefile:
	LONG_DESCRIPTION = readmefile.read()

setup(
	name = 'strobosqueeze',
	version = commandline_parser.__VERSION__,
	packages = [
		'squeezing', 'squeezing.oscillator', 'squeezing.analysis', 'squeezing.dataio', 'squeezing.graphics',
		'squeezing.sweeps', 'squeezing.workflows'
	],
	extras_require = {
		'To run tests': ["pytest", "hypothesis"]
	},
	provides = 'strobosqueeze',
	license = 'MIT',
	description = 'Simulates the covariance of a continuously measured mechanical oscillator under stroboscopic probing and reports quadrature squeezing.',
	long_description = LONG_DESCRIPTION,
	long_description_content_type = 'text/markdown',
	install_requires = [
		'pandas>=1.5.0', 'loguru', 'scipy>=1.3.0', 'matplotlib>=3.0.0', 'numpy>=1.16.2', 'tqdm'
	],
	tests_require = ['pytest', 'hypothesis'],
	classifiers = [
		"Programming Language :: Python :: 3",
		"License :: OSI Approved :: MIT License",
		"Operating System :: OS Independent",
	],
	scripts = ["strobosqueeze"]
)
