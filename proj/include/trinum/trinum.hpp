#pragma once

#include "trinum/error.hpp"
#include "trinum/growth.hpp"
#include "trinum/natural.hpp"
#include "trinum/pascal.hpp"
#include "trinum/prover.hpp"
#include "trinum/residue.hpp"
