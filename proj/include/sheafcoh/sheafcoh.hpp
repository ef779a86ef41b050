#pragma once

#include "sheafcoh/beilinson.hpp"
#include "sheafcoh/bigint.hpp"
#include "sheafcoh/blocks.hpp"
#include "sheafcoh/bott.hpp"
#include "sheafcoh/criteria.hpp"
#include "sheafcoh/parse.hpp"
#include "sheafcoh/sheaf.hpp"
