#pragma once

#include "zagdom/bignat.hpp"
#include "zagdom/bounds.hpp"
#include "zagdom/canonical.hpp"
#include "zagdom/domination.hpp"
#include "zagdom/enumerate.hpp"
#include "zagdom/errors.hpp"
#include "zagdom/families.hpp"
#include "zagdom/indices.hpp"
#include "zagdom/tree.hpp"
#include "zagdom/verify.hpp"
