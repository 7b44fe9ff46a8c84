#pragma once

#include "kneserlab/binomial.hpp"
#include "kneserlab/chain.hpp"
#include "kneserlab/compression.hpp"
#include "kneserlab/constructions.hpp"
#include "kneserlab/errors.hpp"
#include "kneserlab/extremal.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/family_io.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/rset.hpp"
