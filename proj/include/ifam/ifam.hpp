#pragma once

#include "ifam/binomial.hpp"
#include "ifam/bounds.hpp"
#include "ifam/element_set.hpp"
#include "ifam/family.hpp"
#include "ifam/family_io.hpp"
#include "ifam/generator.hpp"
#include "ifam/limits.hpp"
#include "ifam/oracle.hpp"
#include "ifam/partition.hpp"
