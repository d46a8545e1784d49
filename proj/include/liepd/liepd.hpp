#ifndef LIEPD_LIEPD_HPP
#define LIEPD_LIEPD_HPP

#include "congruence.hpp"
#include "errors.hpp"
#include "freeassoc.hpp"
#include "freelie.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "projder.hpp"
#include "representation.hpp"
#include "scalar.hpp"
#include "term.hpp"
#include "word.hpp"
#include "words.hpp"

#endif
