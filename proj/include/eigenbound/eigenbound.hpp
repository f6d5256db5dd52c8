#pragma once

#include "eigenbound/arith.hpp"
#include "eigenbound/bounds.hpp"
#include "eigenbound/experiments.hpp"
#include "eigenbound/modforms.hpp"
#include "eigenbound/nhat.hpp"
#include "eigenbound/primroots.hpp"
