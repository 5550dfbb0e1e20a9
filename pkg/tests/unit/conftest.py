# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest

from hopf_adams.convolution import ConvolutionContext
from hopf_adams.instances import InstanceSpec, build_instance
from hopf_adams.ssym import build_ssym


@pytest.fixture(scope="session")
def ssym3():
    return build_ssym(3)


@pytest.fixture(scope="session")
def ssym4():
    return build_ssym(4)


@pytest.fixture(scope="session")
def ssym5():
    return build_ssym(5)


@pytest.fixture(scope="session")
def ctx3(ssym3):
    return ConvolutionContext(ssym3)


@pytest.fixture(scope="session")
def ctx4(ssym4):
    return ConvolutionContext(ssym4)


@pytest.fixture(scope="session")
def ctx5(ssym5):
    return ConvolutionContext(ssym5)


@pytest.fixture(scope="session")
def tensor_spec():
    return InstanceSpec.of("tensor", [1, 1], 4)


@pytest.fixture(scope="session")
def shuffle_spec():
    return InstanceSpec.of("shuffle", [1, 1], 4)


@pytest.fixture(scope="session")
def tensor_ab(tensor_spec):
    return build_instance(tensor_spec)


@pytest.fixture(scope="session")
def shuffle_ab(shuffle_spec):
    return build_instance(shuffle_spec)


@pytest.fixture(scope="session")
def tensor_ctx(tensor_ab):
    return ConvolutionContext(tensor_ab, 3)


@pytest.fixture(scope="session")
def shuffle_ctx(shuffle_ab):
    return ConvolutionContext(shuffle_ab, 3)


