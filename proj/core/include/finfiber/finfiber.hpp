#pragma once

#include "finfiber/connection.hpp"
#include "finfiber/core.hpp"
#include "finfiber/fibration.hpp"
#include "finfiber/laws.hpp"
#include "finfiber/morphism.hpp"
#include "finfiber/section.hpp"
