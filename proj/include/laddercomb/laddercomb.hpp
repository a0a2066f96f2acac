#pragma once

#include "laddercomb/closed_form.hpp"
#include "laddercomb/exact.hpp"
#include "laddercomb/lgv.hpp"
#include "laddercomb/multiplicity.hpp"
#include "laddercomb/paths.hpp"
#include "laddercomb/region.hpp"
#include "laddercomb/verify.hpp"
