import pytest

from wsnsim import FieldConfig, RadioParams


@pytest.fixture
def radio():
    """Radio constants used in the worked numeric examples (0.5 nJ/bit electronics)."""
    return RadioParams(elec_energy_per_bit=0.5e-9, fs_amp=10e-12,
                       mp_amp=0.0013e-12, aggregation_energy_per_bit=5e-9,
                       packet_bits=4000)


@pytest.fixture
def field():
    return FieldConfig()
