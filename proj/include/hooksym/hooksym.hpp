#ifndef HOOKSYM_HOOKSYM_HPP
#define HOOKSYM_HOOKSYM_HPP

#include "integer.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "series.hpp"
#include "format.hpp"
#include "symfun.hpp"
#include "glchar.hpp"
#include "superchar.hpp"
#include "tensorprod.hpp"
#include "verify.hpp"

#endif  // HOOKSYM_HOOKSYM_HPP
