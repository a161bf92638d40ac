#pragma once

#include "error.hpp"
#include "partition.hpp"
#include "shape.hpp"
#include "filling.hpp"
#include "greene.hpp"
#include "local_rules.hpp"
#include "diagram.hpp"
#include "tableau.hpp"
#include "bijection.hpp"
#include "set_partition.hpp"
#include "insertion.hpp"
#include "enumeration.hpp"
#include "io.hpp"
#include "figures.hpp"
