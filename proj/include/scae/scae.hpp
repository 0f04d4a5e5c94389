#pragma once

#include "scae/category_io.hpp"
#include "scae/errors.hpp"
#include "scae/fusion_ring.hpp"
#include "scae/group.hpp"
#include "scae/labels.hpp"
#include "scae/lie_data.hpp"
#include "scae/modular_data.hpp"
#include "scae/rational_angle.hpp"
#include "scae/reproduce.hpp"
#include "scae/simple_current.hpp"
