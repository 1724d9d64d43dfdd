#pragma once

#include "xsect/error.hpp"
#include "xsect/field.hpp"
#include "xsect/monomial.hpp"
#include "xsect/unipoly.hpp"
#include "xsect/polynomial.hpp"
#include "xsect/text.hpp"
#include "xsect/linalg.hpp"
#include "xsect/bounds.hpp"
#include "xsect/slicing.hpp"
#include "xsect/groebner.hpp"
#include "xsect/membership.hpp"
#include "xsect/reconstruct.hpp"
#include "xsect/io.hpp"
