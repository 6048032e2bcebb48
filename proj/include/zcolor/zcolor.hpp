#pragma once

#include "zcolor/coloring.hpp"
#include "zcolor/diagram.hpp"
#include "zcolor/error.hpp"
#include "zcolor/generators.hpp"
#include "zcolor/intlinalg.hpp"
#include "zcolor/mincolor.hpp"
