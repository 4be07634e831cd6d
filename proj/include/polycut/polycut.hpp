#pragma once

#include "polycut/birkhoff.hpp"
#include "polycut/cube.hpp"
#include "polycut/orderchain.hpp"
