#pragma once

#include "dedekind.hpp"
#include "fields.hpp"
#include "gfq.hpp"
#include "intarith.hpp"
#include "jks.hpp"
#include "monogenic.hpp"
#include "report_io.hpp"
#include "search.hpp"
#include "trinomial.hpp"
