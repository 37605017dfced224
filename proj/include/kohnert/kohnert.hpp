#pragma once

#include "kohnert/checkered.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/families.hpp"
#include "kohnert/io.hpp"
#include "kohnert/key.hpp"
#include "kohnert/obstruction.hpp"
#include "kohnert/one_per_column.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/report.hpp"
#include "kohnert/two_row.hpp"
#include "kohnert/verify.hpp"
