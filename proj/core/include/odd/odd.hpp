#pragma once

#include "odd/domain.hpp"
#include "odd/errors.hpp"
#include "odd/evaluator.hpp"
#include "odd/monitor.hpp"
#include "odd/spec.hpp"
#include "odd/taxonomy.hpp"
#include "odd/value.hpp"
