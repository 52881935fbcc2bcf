#pragma once

#include "sepfam/core.hpp"
#include "sepfam/counting.hpp"
#include "sepfam/document.hpp"
#include "sepfam/error.hpp"
#include "sepfam/matrix.hpp"
#include "sepfam/oracle.hpp"
#include "sepfam/tree.hpp"
