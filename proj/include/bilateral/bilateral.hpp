#pragma once

#include "bilateral/canonical.hpp"
#include "bilateral/conversion.hpp"
#include "bilateral/derivation.hpp"
#include "bilateral/dsl.hpp"
#include "bilateral/error.hpp"
#include "bilateral/harmony.hpp"
#include "bilateral/inversion.hpp"
#include "bilateral/kernel.hpp"
#include "bilateral/library.hpp"
#include "bilateral/restrictions.hpp"
#include "bilateral/sexpr.hpp"
#include "bilateral/syntax.hpp"
