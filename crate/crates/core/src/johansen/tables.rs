//! Asymptotic Johansen trace and maximum-eigenvalue null distributions.
//!
//! Generated by `examples/johansen_tables.rs`: 100000 replications of the
//! Brownian functionals discretized on 1000 steps, seed 20240917.
//! Do not edit by hand.

/// Upper-tail probabilities of the tabulated quantiles.
pub const PROBS: [f64; 21] = [0.999, 0.995, 0.99, 0.975, 0.95, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.15, 0.1, 0.075, 0.05, 0.025, 0.01, 0.005, 0.001];

pub struct Dist {
    pub quantiles: [f64; 21],
    pub mean: f64,
    pub var: f64,
}

/// Indexed [case − 1][trends − 1].
pub static TRACE: [[Dist; 12]; 5] = [
    [
        Dist { quantiles: [0.0000, 0.0001, 0.0002, 0.0015, 0.0058, 0.0233, 0.0963, 0.2187, 0.3854, 0.6054, 0.8964, 1.2909, 1.8803, 2.3278, 2.9846, 3.4587, 4.1387, 5.3249, 6.9567, 8.1821, 11.2189], mean: 1.1445, var: 2.2238 },
        Dist { quantiles: [0.7103, 1.0436, 1.2491, 1.6163, 2.0030, 2.5491, 3.3626, 4.0701, 4.7697, 5.5024, 6.3030, 7.2567, 8.4980, 9.3338, 10.4590, 11.2161, 12.2786, 14.0250, 16.3671, 18.1082, 21.8187], mean: 6.1068, var: 10.6281 },
        Dist { quantiles: [4.5955, 5.5802, 6.1844, 7.1326, 8.0104, 9.1716, 10.7746, 12.0870, 13.2681, 14.4908, 15.7489, 17.1758, 19.0236, 20.2213, 21.8032, 22.8569, 24.2657, 26.6044, 29.5691, 31.6437, 36.4943], mean: 15.0893, var: 25.3573 },
        Dist { quantiles: [12.3254, 14.1934, 15.1633, 16.6621, 18.1482, 19.9479, 22.3301, 24.2003, 25.8440, 27.4941, 29.2322, 31.1605, 33.5732, 35.0823, 37.1065, 38.4536, 40.3017, 43.1252, 46.7076, 49.2208, 54.2141], mean: 28.1286, var: 45.9847 },
        Dist { quantiles: [24.0423, 26.7654, 28.2116, 30.3782, 32.3304, 34.7098, 37.8638, 40.2373, 42.4136, 44.5262, 46.7081, 49.1238, 52.0756, 53.9716, 56.4508, 58.0965, 60.1526, 63.5206, 67.6779, 70.5275, 77.0346], mean: 45.1556, var: 72.5768 },
        Dist { quantiles: [39.8068, 43.4171, 45.1987, 48.0044, 50.4638, 53.5113, 57.4758, 60.4177, 63.0424, 65.5707, 68.2093, 71.1164, 74.6415, 76.8947, 79.7196, 81.5709, 84.0740, 88.1244, 92.9129, 96.3336, 103.3819], mean: 66.2208, var: 105.4417 },
        Dist { quantiles: [59.7102, 63.8731, 66.1494, 69.6359, 72.7252, 76.4327, 81.0922, 84.6061, 87.7325, 90.6926, 93.7633, 97.1321, 101.2125, 103.7688, 107.0126, 109.2494, 112.1525, 116.6630, 122.1921, 126.1545, 134.2749], mean: 91.3379, var: 144.4089 },
        Dist { quantiles: [83.1884, 88.5149, 91.2027, 95.2913, 98.9839, 103.3221, 108.7874, 112.8907, 116.4454, 119.8394, 123.3325, 127.1593, 131.7803, 134.7531, 138.4611, 140.9506, 144.1281, 149.3148, 155.6053, 159.9200, 169.7758], mean: 120.4832, var: 189.8498 },
        Dist { quantiles: [110.9955, 116.9966, 120.2562, 125.1503, 129.3099, 134.2482, 140.4123, 145.0969, 149.1512, 153.0927, 157.0691, 161.4191, 166.5763, 169.8789, 173.9849, 176.7053, 180.1985, 185.9987, 193.0703, 198.1155, 208.1160], mean: 153.7187, var: 242.7700 },
        Dist { quantiles: [143.0073, 150.0300, 153.5983, 158.8568, 163.6303, 169.1875, 176.1987, 181.4394, 185.9854, 190.3843, 194.8167, 199.5715, 205.3279, 208.9282, 213.4968, 216.5282, 220.4057, 226.7661, 234.3427, 239.6274, 251.0197], mean: 190.9757, var: 300.8465 },
        Dist { quantiles: [178.6011, 186.7810, 190.9300, 196.8116, 201.9571, 208.3762, 216.0109, 221.7095, 226.8647, 231.7088, 236.5632, 241.7774, 248.1781, 252.0709, 257.2602, 260.5071, 264.7580, 271.5732, 279.8710, 285.5607, 298.3281], mean: 232.3086, var: 365.8804 },
        Dist { quantiles: [219.0859, 227.5597, 232.2453, 238.8722, 244.6056, 251.4218, 259.9640, 266.4113, 271.8791, 277.0988, 282.3918, 288.1410, 295.0628, 299.3143, 304.7351, 308.2795, 313.0154, 320.5530, 329.2783, 335.8440, 348.4488], mean: 277.7224, var: 435.0002 },
    ],
    [
        Dist { quantiles: [0.3555, 0.4969, 0.6035, 0.7926, 1.0123, 1.3562, 1.9018, 2.4032, 2.9112, 3.4578, 4.0784, 4.8406, 5.8686, 6.5688, 7.5285, 8.2061, 9.1484, 10.6401, 12.6736, 14.1404, 17.6279], mean: 4.0535, var: 6.8335 },
        Dist { quantiles: [3.2528, 4.0637, 4.5007, 5.2629, 6.0024, 6.9577, 8.2856, 9.3675, 10.4009, 11.4257, 12.5410, 13.8245, 15.4625, 16.5372, 17.9585, 18.9385, 20.2349, 22.3651, 25.0562, 26.9517, 30.9161], mean: 12.0495, var: 19.5308 },
        Dist { quantiles: [9.9554, 11.5604, 12.4478, 13.7994, 15.0615, 16.6808, 18.7959, 20.4320, 21.9533, 23.4310, 25.0051, 26.7765, 28.9720, 30.4018, 32.3047, 33.5681, 35.2571, 37.9372, 41.2079, 43.6954, 48.7336], mean: 24.0665, var: 38.3440 },
        Dist { quantiles: [20.4712, 23.1782, 24.4334, 26.4590, 28.2091, 30.4597, 33.3310, 35.5295, 37.5238, 39.4576, 41.4879, 43.7712, 46.5345, 48.3169, 50.6383, 52.2293, 54.2480, 57.5289, 61.3999, 64.1015, 70.1583], mean: 40.1148, var: 63.3412 },
        Dist { quantiles: [35.4489, 38.8867, 40.5601, 43.1247, 45.3664, 48.2731, 51.8535, 54.6312, 57.1235, 59.5235, 61.9749, 64.7390, 68.1187, 70.2472, 72.9749, 74.7670, 77.1207, 80.9777, 85.5996, 88.9187, 95.3305], mean: 60.1691, var: 94.1732 },
        Dist { quantiles: [54.3682, 58.1656, 60.2430, 63.6069, 66.5815, 70.0339, 74.4825, 77.8286, 80.7161, 83.5770, 86.5406, 89.7916, 93.6977, 96.0844, 99.2659, 101.3516, 104.1260, 108.6311, 113.8448, 117.2925, 125.0436], mean: 84.2491, var: 131.5870 },
        Dist { quantiles: [76.7213, 81.6429, 84.3903, 88.3088, 91.8383, 95.9958, 101.1482, 105.0045, 108.5008, 111.7676, 115.1560, 118.7733, 123.2494, 126.0394, 129.6043, 132.0342, 135.0938, 140.0191, 145.9779, 150.4111, 158.8487], mean: 112.3854, var: 174.3264 },
        Dist { quantiles: [103.6341, 109.6565, 112.5667, 117.0145, 121.0342, 125.8109, 131.8691, 136.3149, 140.2075, 143.9269, 147.7695, 151.8875, 156.9114, 160.0292, 164.1009, 166.7253, 170.1800, 175.6685, 182.2236, 186.8543, 196.5814], mean: 144.5660, var: 223.9515 },
        Dist { quantiles: [134.2391, 140.9234, 144.6877, 149.9770, 154.5015, 159.8515, 166.5843, 171.6056, 175.9954, 180.2031, 184.4993, 189.1772, 194.6693, 198.2207, 202.6948, 205.6016, 209.3415, 215.3676, 222.8642, 227.7269, 238.1143], mean: 180.8453, var: 280.7528 },
        Dist { quantiles: [169.3622, 177.4384, 181.0084, 186.7979, 191.9268, 197.8516, 205.3770, 211.0220, 215.8992, 220.5322, 225.2251, 230.3421, 236.5066, 240.3405, 245.2290, 248.5153, 252.6557, 259.2205, 267.1702, 272.7510, 284.2270], mean: 221.1536, var: 342.6666 },
        Dist { quantiles: [208.6509, 216.7846, 221.3615, 227.8462, 233.4272, 240.0664, 248.2380, 254.3641, 259.7060, 264.7749, 270.0124, 275.7435, 282.4716, 286.6388, 291.7791, 295.2188, 299.7928, 306.9724, 315.2357, 321.6233, 334.6912], mean: 265.5108, var: 410.9884 },
        Dist { quantiles: [251.1825, 261.0124, 265.2993, 272.7773, 278.9472, 286.2051, 295.2229, 301.9780, 307.7693, 313.2886, 318.9498, 325.0782, 332.2105, 336.7657, 342.5081, 346.4274, 351.3162, 358.9924, 367.8039, 373.9341, 389.9054], mean: 313.9540, var: 484.9352 },
    ],
    [
        Dist { quantiles: [0.0000, 0.0000, 0.0002, 0.0010, 0.0039, 0.0161, 0.0648, 0.1484, 0.2738, 0.4549, 0.7051, 1.0764, 1.6622, 2.0911, 2.7260, 3.1796, 3.8659, 5.0834, 6.6705, 7.8204, 10.6178], mean: 1.0048, var: 2.0095 },
        Dist { quantiles: [1.5271, 1.9917, 2.2745, 2.7932, 3.3270, 4.0448, 5.0871, 5.9712, 6.8217, 7.6903, 8.6427, 9.7624, 11.1826, 12.1058, 13.3722, 14.2274, 15.4120, 17.3770, 19.8303, 21.5381, 25.5724], mean: 8.3130, var: 14.3735 },
        Dist { quantiles: [7.0385, 8.4105, 9.1405, 10.2878, 11.3936, 12.7858, 14.6641, 16.1647, 17.5246, 18.8880, 20.3126, 21.9751, 24.0169, 25.3212, 27.0396, 28.2186, 29.7866, 32.3403, 35.4287, 37.5880, 42.5216], mean: 19.5154, var: 32.1020 },
        Dist { quantiles: [16.9077, 19.1272, 20.1763, 21.9768, 23.6840, 25.6830, 28.3874, 30.4504, 32.2821, 34.1004, 36.0238, 38.1152, 40.7647, 42.4400, 44.5958, 46.0894, 48.0488, 51.0842, 54.7692, 57.4839, 63.5872], mean: 34.7432, var: 55.5486 },
        Dist { quantiles: [30.6490, 33.7509, 35.3594, 37.7459, 39.9351, 42.5854, 46.0444, 48.6680, 50.9760, 53.2338, 55.6200, 58.1966, 61.4083, 63.4644, 66.0617, 67.7405, 69.9793, 73.6707, 78.1137, 81.3050, 87.6592], mean: 53.8966, var: 84.5708 },
        Dist { quantiles: [48.6800, 52.4943, 54.4468, 57.4316, 60.1963, 63.4754, 67.6985, 70.8548, 73.6984, 76.4287, 79.1929, 82.2545, 86.0227, 88.3686, 91.4217, 93.4651, 96.1818, 100.3718, 105.0174, 108.6627, 116.0680], mean: 77.0442, var: 119.7336 },
        Dist { quantiles: [70.4403, 75.1644, 77.5234, 81.2376, 84.4127, 88.3547, 93.3902, 97.1224, 100.4543, 103.5916, 106.8237, 110.3718, 114.6317, 117.3139, 120.8444, 123.1986, 126.2131, 130.9831, 136.6633, 140.4162, 148.7899], mean: 104.2184, var: 161.5472 },
        Dist { quantiles: [95.7616, 101.8781, 104.8201, 109.0372, 112.8979, 117.3711, 123.1220, 127.4158, 131.1815, 134.8031, 138.4474, 142.4599, 147.2495, 150.3717, 154.2955, 156.7469, 160.2018, 165.5154, 171.8762, 176.4068, 185.1873], mean: 135.4158, var: 207.9436 },
        Dist { quantiles: [125.7784, 132.5878, 135.9230, 140.9474, 145.2134, 150.4694, 156.9081, 161.7246, 165.8948, 169.9362, 174.0995, 178.6065, 183.9688, 187.3772, 191.7126, 194.6290, 198.4437, 204.3120, 211.4791, 216.0462, 226.0565], mean: 170.6517, var: 261.6087 },
        Dist { quantiles: [159.1949, 167.1233, 171.2556, 176.7422, 181.6892, 187.5646, 194.8227, 200.1705, 204.8358, 209.3331, 213.9147, 218.8888, 224.8544, 228.5757, 233.3970, 236.4860, 240.5436, 247.2112, 254.4406, 259.7670, 270.3078], mean: 210.0076, var: 321.2136 },
        Dist { quantiles: [197.9373, 205.8392, 210.2670, 216.7498, 222.0587, 228.5737, 236.6661, 242.6571, 247.8130, 252.7217, 257.7236, 263.1503, 269.7023, 273.8407, 279.0669, 282.3355, 286.8335, 293.6023, 301.8218, 307.5121, 319.3643], mean: 253.3565, var: 387.1069 },
        Dist { quantiles: [239.8960, 249.0934, 253.6899, 260.6364, 266.7063, 273.7554, 282.6270, 289.0712, 294.6664, 300.1022, 305.5994, 311.5152, 318.6491, 323.0935, 328.6250, 332.3160, 337.0008, 344.7478, 353.4451, 359.7656, 372.7032], mean: 300.7743, var: 459.6394 },
    ],
    [
        Dist { quantiles: [1.0347, 1.3410, 1.5465, 1.8948, 2.2688, 2.8049, 3.5979, 4.2839, 4.9781, 5.6965, 6.4946, 7.4297, 8.6770, 9.5210, 10.6335, 11.3752, 12.4867, 14.1784, 16.4219, 18.0962, 21.6673], mean: 6.3115, var: 10.3925 },
        Dist { quantiles: [5.6490, 6.8067, 7.3996, 8.3793, 9.3088, 10.5165, 12.1574, 13.4774, 14.6840, 15.8861, 17.1698, 18.6262, 20.4927, 21.7046, 23.2957, 24.3462, 25.7956, 28.1067, 31.1892, 33.0623, 37.8522], mean: 16.5063, var: 25.9408 },
        Dist { quantiles: [14.4872, 16.4186, 17.4197, 19.0437, 20.5618, 22.3766, 24.8312, 26.7147, 28.4179, 30.0854, 31.8278, 33.7893, 36.2160, 37.7930, 39.8356, 41.1980, 43.0094, 45.8866, 49.3811, 52.0361, 57.5048], mean: 30.7059, var: 47.4195 },
        Dist { quantiles: [27.3264, 30.1315, 31.6609, 33.8063, 35.8375, 38.2760, 41.4769, 43.9538, 46.1051, 48.2036, 50.4209, 52.8749, 55.8395, 57.7967, 60.2419, 61.8536, 64.0576, 67.4196, 71.6567, 74.6190, 81.2780], mean: 48.8515, var: 74.4143 },
        Dist { quantiles: [44.1821, 47.8161, 49.7020, 52.5750, 55.1278, 58.1890, 62.1290, 65.1481, 67.7928, 70.3671, 73.0066, 75.9318, 79.4395, 81.6993, 84.6757, 86.6221, 89.1442, 93.1291, 97.8079, 101.0003, 108.0402], mean: 70.9984, var: 107.4510 },
        Dist { quantiles: [64.9438, 69.7079, 71.8394, 75.1607, 78.2363, 82.0359, 86.7850, 90.3824, 93.5148, 96.5087, 99.5793, 102.9984, 107.0937, 109.6926, 113.0833, 115.2386, 118.1822, 122.6627, 128.1251, 131.9638, 139.9363], mean: 97.1364, var: 147.0670 },
        Dist { quantiles: [89.8469, 95.1545, 97.8013, 101.9576, 105.6414, 110.0432, 115.5166, 119.6109, 123.2077, 126.7037, 130.2037, 134.0348, 138.7133, 141.6211, 145.4560, 147.9375, 151.1624, 156.3546, 162.6309, 166.6489, 175.4638], mean: 127.3099, var: 192.1285 },
        Dist { quantiles: [118.5252, 124.8617, 128.0532, 132.9129, 137.0513, 142.0346, 148.3103, 152.9243, 156.9276, 160.7914, 164.8063, 169.1761, 174.4004, 177.6996, 181.8454, 184.5667, 188.2097, 193.9932, 200.5841, 205.2899, 215.3227], mean: 161.5079, var: 242.8370 },
        Dist { quantiles: [151.4307, 158.7315, 162.4650, 167.7391, 172.4803, 178.0412, 185.1294, 190.3127, 194.8607, 199.1482, 203.5828, 208.4414, 214.2078, 217.7654, 222.3755, 225.4894, 229.5664, 235.6372, 243.1243, 248.3904, 259.1088], mean: 199.8338, var: 300.9507 },
        Dist { quantiles: [188.1526, 195.9957, 200.3776, 206.7177, 211.9091, 218.2019, 225.9476, 231.7449, 236.7159, 241.4831, 246.3530, 251.6571, 258.0455, 261.9995, 267.0596, 270.3906, 274.6744, 281.2993, 289.3898, 294.4013, 306.6329], mean: 242.1592, var: 364.8128 },
        Dist { quantiles: [229.3058, 238.4097, 242.9148, 249.4697, 255.4503, 262.3705, 270.8319, 277.1353, 282.5989, 287.8470, 293.2400, 298.9417, 305.8299, 310.2446, 315.6260, 319.1618, 323.6670, 331.1446, 339.8547, 345.7775, 357.8070], mean: 288.5256, var: 433.9700 },
        Dist { quantiles: [274.2261, 284.2433, 289.4368, 296.5735, 302.9714, 310.5331, 319.8171, 326.7254, 332.7057, 338.3439, 344.1429, 350.3819, 357.8206, 362.4102, 368.2412, 372.1805, 377.3539, 385.0323, 394.7245, 401.7768, 414.2397], mean: 339.0125, var: 511.6283 },
    ],
    [
        Dist { quantiles: [0.0000, 0.0000, 0.0002, 0.0010, 0.0041, 0.0164, 0.0643, 0.1491, 0.2742, 0.4541, 0.7082, 1.0712, 1.6355, 2.0593, 2.6863, 3.1562, 3.8165, 5.0299, 6.6182, 7.8761, 10.8050], mean: 0.9968, var: 1.9866 },
        Dist { quantiles: [2.3725, 3.0598, 3.4253, 4.0473, 4.7181, 5.5906, 6.8171, 7.8443, 8.8218, 9.7968, 10.8710, 12.1183, 13.6988, 14.7361, 16.1475, 17.1203, 18.3877, 20.5000, 23.0271, 25.0217, 29.4153], mean: 10.4462, var: 18.1430 },
        Dist { quantiles: [9.7449, 11.2697, 12.1439, 13.4442, 14.7276, 16.3153, 18.4376, 20.0903, 21.6473, 23.1315, 24.7406, 26.5301, 28.7429, 30.1497, 32.0604, 33.2985, 34.9618, 37.7367, 40.9795, 43.3060, 48.8665], mean: 23.7729, var: 38.8556 },
        Dist { quantiles: [21.3252, 23.8713, 25.1468, 27.2207, 29.0189, 31.2617, 34.1714, 36.4529, 38.4800, 40.4442, 42.4904, 44.8150, 47.6439, 49.4431, 51.7665, 53.3044, 55.3888, 58.6286, 62.5346, 65.5991, 71.8193], mean: 41.0905, var: 65.1512 },
        Dist { quantiles: [36.9747, 40.5395, 42.3575, 44.9411, 47.3855, 50.2244, 53.8811, 56.7147, 59.2582, 61.7127, 64.2534, 67.0091, 70.3810, 72.5126, 75.3051, 77.1263, 79.5601, 83.4328, 87.9646, 91.4855, 97.8614], mean: 62.3425, var: 96.8719 },
        Dist { quantiles: [57.2610, 61.5074, 63.6141, 66.8421, 69.6658, 73.1276, 77.6959, 81.0635, 84.0356, 86.9123, 89.9093, 93.2056, 97.1200, 99.6323, 102.8582, 104.9785, 107.8009, 112.2164, 117.1200, 120.6284, 128.7696], mean: 87.5885, var: 134.7488 },
        Dist { quantiles: [80.6320, 86.1037, 88.6883, 92.5009, 95.9621, 100.1703, 105.4652, 109.3750, 112.8670, 116.2302, 119.5908, 123.2865, 127.8065, 130.6218, 134.3180, 136.7661, 139.8632, 144.8639, 150.8459, 154.9206, 162.9599], mean: 116.8257, var: 178.2123 },
        Dist { quantiles: [109.1251, 114.8987, 117.7861, 122.2507, 126.3174, 131.2029, 137.2748, 141.7873, 145.7413, 149.4844, 153.2808, 157.5062, 162.5467, 165.7191, 169.7534, 172.4370, 175.8430, 181.3906, 187.9132, 192.5477, 201.5585], mean: 150.0840, var: 226.9889 },
        Dist { quantiles: [141.2026, 147.6641, 151.1686, 156.3076, 160.9053, 166.3297, 173.1245, 178.0925, 182.4852, 186.6606, 190.9793, 195.6692, 201.1845, 204.7306, 209.2896, 212.1562, 216.0039, 222.3068, 229.5275, 234.2502, 244.8109], mean: 187.3503, var: 282.0908 },
        Dist { quantiles: [176.4287, 184.0866, 188.1618, 194.1782, 199.4149, 205.5002, 213.0262, 218.5848, 223.4770, 228.1281, 232.8395, 237.9883, 244.1438, 247.9869, 252.8369, 256.1444, 260.3816, 266.9549, 274.6663, 279.7607, 290.6428], mean: 228.7558, var: 344.0091 },
        Dist { quantiles: [216.5798, 224.9354, 229.3342, 236.1565, 241.8964, 248.5852, 256.8611, 263.0924, 268.5591, 273.5687, 278.6527, 284.3100, 290.9810, 295.1418, 300.3320, 303.8550, 308.4414, 315.7249, 324.2064, 329.9298, 342.9200], mean: 274.1398, var: 411.3820 },
        Dist { quantiles: [260.8487, 270.5969, 275.1131, 282.0670, 288.2943, 295.7352, 304.9378, 311.6320, 317.5084, 323.0577, 328.6828, 334.7117, 341.9672, 346.4071, 352.2008, 355.9265, 360.8801, 368.7109, 377.8598, 384.5504, 397.3592], mean: 323.6303, var: 486.7939 },
    ],
];

/// Indexed [case − 1][trends − 1].
pub static MAX_EIGEN: [[Dist; 12]; 5] = [
    [
        Dist { quantiles: [0.0000, 0.0001, 0.0002, 0.0015, 0.0058, 0.0233, 0.0963, 0.2187, 0.3854, 0.6054, 0.8964, 1.2909, 1.8803, 2.3278, 2.9846, 3.4587, 4.1387, 5.3249, 6.9567, 8.1821, 11.2189], mean: 1.1445, var: 2.2238 },
        Dist { quantiles: [0.6241, 0.8936, 1.0759, 1.3996, 1.7219, 2.1999, 2.9125, 3.5443, 4.1718, 4.8370, 5.5653, 6.4638, 7.6104, 8.4112, 9.4626, 10.1870, 11.1893, 12.8815, 15.0804, 16.6891, 20.6891], mean: 5.4380, var: 9.1223 },
        Dist { quantiles: [2.8352, 3.5092, 3.8854, 4.4950, 5.1408, 5.9611, 7.1072, 8.0678, 8.9663, 9.8860, 10.8591, 12.0123, 13.4640, 14.4266, 15.7462, 16.6273, 17.8369, 19.7903, 22.3789, 24.1410, 28.0620], mean: 10.4687, var: 15.6841 },
        Dist { quantiles: [5.9060, 6.9115, 7.4693, 8.3759, 9.2350, 10.3214, 11.7982, 12.9763, 14.0474, 15.1400, 16.3147, 17.6476, 19.3467, 20.4511, 21.9137, 22.9289, 24.2836, 26.4087, 29.2192, 31.2537, 35.5826], mean: 15.7384, var: 21.6203 },
        Dist { quantiles: [9.6219, 10.9138, 11.5665, 12.6500, 13.6593, 14.9562, 16.6622, 18.0086, 19.2620, 20.5014, 21.7978, 23.2822, 25.1702, 26.3960, 27.9741, 29.0796, 30.5203, 32.9311, 35.8457, 37.8850, 42.2796], mean: 21.0882, var: 27.0149 },
        Dist { quantiles: [13.5538, 15.1045, 15.9212, 17.1657, 18.3041, 19.7874, 21.7015, 23.1829, 24.5505, 25.9293, 27.3633, 28.9850, 31.0340, 32.3586, 34.1058, 35.2700, 36.7975, 39.2079, 42.1509, 44.3860, 49.4837], mean: 26.5246, var: 32.1892 },
        Dist { quantiles: [17.8457, 19.5067, 20.4166, 21.8139, 23.0919, 24.7542, 26.8729, 28.5201, 29.9836, 31.4419, 32.9580, 34.7001, 36.8793, 38.2608, 40.0895, 41.3129, 42.9161, 45.4599, 48.6246, 50.9477, 56.2370], mean: 32.0275, var: 36.8327 },
        Dist { quantiles: [22.1736, 24.1003, 25.1788, 26.6712, 28.0988, 29.8269, 32.0742, 33.8130, 35.3699, 36.9498, 38.5663, 40.4272, 42.6930, 44.1731, 46.0226, 47.3000, 49.0358, 51.7945, 55.2744, 57.7804, 63.0669], mean: 37.5485, var: 41.4544 },
        Dist { quantiles: [26.6339, 28.9396, 29.9846, 31.6240, 33.1457, 34.9712, 37.3530, 39.1778, 40.8657, 42.5246, 44.2282, 46.1540, 48.5436, 50.0779, 52.1001, 53.3903, 55.2220, 58.1296, 61.7476, 64.4612, 70.0879], mean: 43.1284, var: 46.1681 },
        Dist { quantiles: [31.5856, 33.6762, 34.8530, 36.6730, 38.2556, 40.1452, 42.6642, 44.6336, 46.3780, 48.1036, 49.9198, 51.9045, 54.3866, 55.9883, 58.0672, 59.4921, 61.4241, 64.4813, 68.1706, 70.9185, 76.6375], mean: 48.7280, var: 50.5827 },
        Dist { quantiles: [36.0361, 38.5794, 39.8155, 41.6840, 43.2930, 45.3815, 48.0708, 50.1200, 51.9442, 53.7334, 55.6033, 57.6817, 60.3158, 61.9509, 64.0991, 65.5551, 67.4763, 70.5925, 74.4311, 77.0377, 82.7033], mean: 54.3543, var: 54.7779 },
        Dist { quantiles: [40.9708, 43.4670, 44.7735, 46.7744, 48.5590, 50.6802, 53.4885, 55.6192, 57.5408, 59.3791, 61.3350, 63.5289, 66.1716, 67.8794, 70.1007, 71.6175, 73.6686, 76.7610, 80.6727, 83.5194, 89.4931], mean: 60.0143, var: 58.9918 },
    ],
    [
        Dist { quantiles: [0.3555, 0.4969, 0.6035, 0.7926, 1.0123, 1.3562, 1.9018, 2.4032, 2.9112, 3.4578, 4.0784, 4.8406, 5.8686, 6.5688, 7.5285, 8.2061, 9.1484, 10.6401, 12.6736, 14.1404, 17.6279], mean: 4.0535, var: 6.8335 },
        Dist { quantiles: [2.1239, 2.6788, 3.0335, 3.5926, 4.1403, 4.8544, 5.8862, 6.7503, 7.5512, 8.3938, 9.2930, 10.3731, 11.7407, 12.6413, 13.8701, 14.6984, 15.8251, 17.6904, 20.0858, 21.8450, 25.7140], mean: 8.9804, var: 13.4275 },
        Dist { quantiles: [5.0205, 6.0008, 6.4618, 7.2655, 8.0727, 9.0696, 10.4367, 11.5409, 12.5625, 13.5960, 14.6942, 15.9748, 17.5785, 18.6509, 20.0735, 21.0253, 22.2984, 24.4518, 27.0204, 28.9949, 33.2213], mean: 14.1851, var: 19.4851 },
        Dist { quantiles: [8.5211, 9.7867, 10.4291, 11.4274, 12.4099, 13.6223, 15.2487, 16.5533, 17.7215, 18.9132, 20.1965, 21.6348, 23.4525, 24.6080, 26.1893, 27.2263, 28.6823, 31.0814, 33.8394, 35.9689, 40.5518], mean: 19.5239, var: 25.2868 },
        Dist { quantiles: [12.4912, 13.9289, 14.6889, 15.8677, 16.9890, 18.3914, 20.2344, 21.6717, 22.9890, 24.3051, 25.7096, 27.2954, 29.2760, 30.5428, 32.2524, 33.3607, 34.9556, 37.3934, 40.3681, 42.3964, 47.2139], mean: 24.9209, var: 30.4246 },
        Dist { quantiles: [16.6136, 18.3549, 19.1585, 20.5085, 21.7514, 23.2891, 25.3172, 26.9336, 28.3715, 29.8012, 31.3113, 33.0382, 35.1813, 36.5382, 38.2925, 39.4939, 41.1054, 43.6447, 46.9246, 49.2608, 54.1216], mean: 30.4100, var: 35.4695 },
        Dist { quantiles: [20.7426, 22.7298, 23.7480, 25.2235, 26.6216, 28.3377, 30.5660, 32.2703, 33.8213, 35.3527, 36.9579, 38.7549, 41.0056, 42.4491, 44.3212, 45.5494, 47.2469, 49.8926, 53.2969, 55.6831, 60.6690], mean: 35.9416, var: 40.0103 },
        Dist { quantiles: [25.4722, 27.4684, 28.5393, 30.2079, 31.6697, 33.5054, 35.8069, 37.6010, 39.2561, 40.8652, 42.5820, 44.4875, 46.8021, 48.2928, 50.2382, 51.5978, 53.4080, 56.2566, 59.7126, 62.3101, 68.0326], mean: 41.4864, var: 44.5111 },
        Dist { quantiles: [30.0007, 32.2228, 33.4651, 35.1987, 36.7592, 38.6104, 41.1016, 43.0420, 44.7632, 46.4657, 48.2325, 50.2195, 52.6402, 54.2410, 56.3232, 57.6977, 59.5833, 62.6139, 66.1507, 68.8257, 74.3226], mean: 47.0770, var: 49.1242 },
        Dist { quantiles: [34.8320, 37.2838, 38.4607, 40.2333, 41.8316, 43.8715, 46.4600, 48.4940, 50.3220, 52.0827, 53.9134, 55.9818, 58.5296, 60.1773, 62.3442, 63.7800, 65.7487, 68.7460, 72.5197, 75.4076, 80.9658], mean: 52.7003, var: 53.4413 },
        Dist { quantiles: [39.9211, 42.1093, 43.3359, 45.3466, 47.0900, 49.1875, 51.9194, 54.0237, 55.8840, 57.6896, 59.6083, 61.7691, 64.4424, 66.1574, 68.3484, 69.7969, 71.7031, 74.8179, 78.6379, 81.3342, 87.2016], mean: 58.3400, var: 57.0361 },
        Dist { quantiles: [44.4350, 47.1092, 48.5100, 50.5240, 52.3097, 54.5026, 57.3464, 59.5006, 61.4704, 63.3933, 65.3771, 67.5836, 70.2746, 72.0231, 74.3457, 75.8430, 77.8696, 81.0032, 84.9010, 87.7476, 93.4734], mean: 64.0049, var: 61.0999 },
    ],
    [
        Dist { quantiles: [0.0000, 0.0000, 0.0002, 0.0010, 0.0039, 0.0161, 0.0648, 0.1484, 0.2738, 0.4549, 0.7051, 1.0764, 1.6622, 2.0911, 2.7260, 3.1796, 3.8659, 5.0834, 6.6705, 7.8204, 10.6178], mean: 1.0048, var: 2.0095 },
        Dist { quantiles: [1.3652, 1.7653, 2.0171, 2.4650, 2.9542, 3.5978, 4.5317, 5.3348, 6.1121, 6.9136, 7.7930, 8.8342, 10.1772, 11.0586, 12.2365, 13.0789, 14.1762, 15.9710, 18.4829, 19.9635, 24.0021], mean: 7.5257, var: 12.4793 },
        Dist { quantiles: [4.2239, 5.0499, 5.5346, 6.3326, 7.0892, 8.0556, 9.3833, 10.4428, 11.4537, 12.4661, 13.5601, 14.8248, 16.4299, 17.4921, 18.8937, 19.8335, 21.0884, 23.1631, 25.9231, 27.8292, 31.6675], mean: 13.0729, var: 18.9752 },
        Dist { quantiles: [7.8711, 8.9278, 9.5897, 10.6226, 11.5698, 12.7419, 14.3421, 15.6109, 16.7803, 17.9703, 19.2270, 20.6571, 22.4826, 23.6722, 25.2195, 26.2553, 27.6325, 29.9414, 32.8209, 35.0507, 39.6899], mean: 18.5805, var: 24.8474 },
        Dist { quantiles: [11.7155, 13.1239, 13.9083, 15.1076, 16.2003, 17.5809, 19.4135, 20.8455, 22.1468, 23.4458, 24.8422, 26.4217, 28.3933, 29.6777, 31.3793, 32.5354, 34.0667, 36.5179, 39.5667, 41.7897, 46.5516], mean: 24.0694, var: 30.1961 },
        Dist { quantiles: [15.9903, 17.5863, 18.4542, 19.7565, 20.9911, 22.5293, 24.5140, 26.0872, 27.5287, 28.9535, 30.4517, 32.1339, 34.2717, 35.6416, 37.4470, 38.6206, 40.1946, 42.7786, 46.0173, 48.2772, 53.5222], mean: 29.5635, var: 35.0254 },
        Dist { quantiles: [20.3569, 22.0919, 23.0608, 24.5091, 25.8618, 27.5571, 29.7433, 31.4319, 33.0051, 34.5178, 36.1388, 37.9566, 40.1420, 41.5560, 43.4313, 44.6861, 46.3997, 49.1694, 52.6123, 55.0963, 60.7305], mean: 35.1236, var: 39.9152 },
        Dist { quantiles: [24.6154, 26.7343, 27.8144, 29.3885, 30.9055, 32.6642, 35.0177, 36.8308, 38.4962, 40.0853, 41.7688, 43.6626, 45.9728, 47.4684, 49.4365, 50.7500, 52.4990, 55.3609, 58.8968, 61.4530, 66.7136], mean: 40.6812, var: 44.1833 },
        Dist { quantiles: [29.4462, 31.5974, 32.7215, 34.4109, 35.9638, 37.8785, 40.3441, 42.2455, 43.9818, 45.6629, 47.4393, 49.4026, 51.8558, 53.4206, 55.4782, 56.8865, 58.6923, 61.6908, 65.3940, 68.0459, 73.8269], mean: 46.2827, var: 48.8699 },
        Dist { quantiles: [34.3657, 36.5768, 37.7108, 39.4365, 41.1110, 43.0954, 45.7071, 47.7107, 49.5384, 51.3088, 53.1326, 55.2092, 57.7469, 59.3415, 61.5414, 62.9526, 64.8708, 67.9002, 71.6317, 74.1691, 80.7585], mean: 51.9125, var: 53.0619 },
        Dist { quantiles: [39.0526, 41.3551, 42.5667, 44.5054, 46.2483, 48.3956, 51.1474, 53.2450, 55.1247, 56.9494, 58.8349, 61.0133, 63.6642, 65.3515, 67.5444, 68.9341, 70.9238, 73.9746, 77.9326, 80.9787, 86.6703], mean: 57.5663, var: 57.1951 },
        Dist { quantiles: [43.7273, 46.3454, 47.6401, 49.7094, 51.5679, 53.7376, 56.6172, 58.7629, 60.6839, 62.5947, 64.5907, 66.8035, 69.5177, 71.2294, 73.4823, 74.9900, 76.9940, 80.2685, 84.3439, 87.2022, 93.0549], mean: 63.2292, var: 60.9864 },
    ],
    [
        Dist { quantiles: [1.0347, 1.3410, 1.5465, 1.8948, 2.2688, 2.8049, 3.5979, 4.2839, 4.9781, 5.6965, 6.4946, 7.4297, 8.6770, 9.5210, 10.6335, 11.3752, 12.4867, 14.1784, 16.4219, 18.0962, 21.6673], mean: 6.3115, var: 10.3925 },
        Dist { quantiles: [3.5567, 4.3184, 4.7515, 5.4402, 6.1195, 7.0009, 8.2308, 9.2288, 10.1591, 11.0994, 12.1220, 13.3369, 14.8506, 15.8442, 17.1800, 18.1110, 19.3253, 21.2909, 23.9129, 25.7632, 29.8802], mean: 11.7050, var: 16.8644 },
        Dist { quantiles: [6.8913, 7.9631, 8.5270, 9.4956, 10.4210, 11.5499, 13.0749, 14.2820, 15.3970, 16.5034, 17.7169, 19.1083, 20.8700, 22.0044, 23.5197, 24.5383, 25.9403, 28.1454, 30.9795, 33.0451, 37.7346], mean: 17.1295, var: 23.0429 },
        Dist { quantiles: [10.6694, 12.1207, 12.7829, 13.9129, 14.9628, 16.2758, 18.0352, 19.4204, 20.6765, 21.9440, 23.3004, 24.8265, 26.7568, 27.9842, 29.6392, 30.7328, 32.2485, 34.7331, 37.6255, 39.8782, 44.4167], mean: 22.5635, var: 28.3994 },
        Dist { quantiles: [14.7527, 16.3422, 17.2340, 18.4980, 19.6981, 21.1997, 23.1215, 24.6357, 26.0238, 27.4183, 28.8941, 30.5496, 32.5842, 33.9863, 35.7206, 36.8910, 38.3981, 40.9361, 44.1200, 46.3565, 51.4374], mean: 28.0334, var: 33.3143 },
        Dist { quantiles: [19.2905, 20.8743, 21.7682, 23.2187, 24.5063, 26.1368, 28.2767, 29.9567, 31.4634, 32.9732, 34.5452, 36.3224, 38.4945, 39.8692, 41.7066, 42.9411, 44.5962, 47.2471, 50.6643, 53.0434, 58.4529], mean: 33.5573, var: 38.1884 },
        Dist { quantiles: [23.4628, 25.3460, 26.4533, 27.9962, 29.4523, 31.2396, 33.5488, 35.3246, 36.9355, 38.5245, 40.1768, 42.0267, 44.3289, 45.7926, 47.7075, 48.9727, 50.7287, 53.5399, 56.9269, 59.8016, 64.8241], mean: 39.1037, var: 42.7694 },
        Dist { quantiles: [28.1827, 30.2494, 31.3947, 33.0796, 34.5358, 36.3769, 38.8378, 40.6995, 42.3978, 44.0623, 45.7793, 47.7566, 50.1493, 51.7353, 53.7092, 55.0764, 56.9451, 59.8732, 63.4060, 66.2154, 71.6689], mean: 44.6736, var: 47.2548 },
        Dist { quantiles: [32.9867, 35.2060, 36.2888, 38.0575, 39.6346, 41.5985, 44.1806, 46.1597, 47.9456, 49.6880, 51.5008, 53.5377, 56.0632, 57.6904, 59.7594, 61.1987, 63.1121, 66.0881, 69.8692, 72.4095, 78.7922], mean: 50.3037, var: 51.6965 },
        Dist { quantiles: [37.4135, 39.9647, 41.1642, 43.0335, 44.7767, 46.8513, 49.6138, 51.6665, 53.5076, 55.3121, 57.2263, 59.3151, 61.9589, 63.6397, 65.8064, 67.2451, 69.1649, 72.2844, 76.2786, 79.0952, 84.8426], mean: 55.9416, var: 56.0384 },
        Dist { quantiles: [42.4331, 44.9161, 46.2105, 48.2292, 50.0431, 52.2135, 55.0422, 57.1730, 59.0554, 60.9748, 62.9277, 65.1093, 67.8040, 69.5245, 71.7283, 73.2251, 75.1713, 78.3958, 82.3809, 85.1469, 91.0009], mean: 61.5818, var: 59.5214 },
        Dist { quantiles: [47.4748, 50.0135, 51.4279, 53.4900, 55.3197, 57.5703, 60.4696, 62.7049, 64.7228, 66.6500, 68.6635, 70.8919, 73.6479, 75.4702, 77.7809, 79.3282, 81.3178, 84.6924, 88.5894, 91.3739, 97.7680], mean: 67.2641, var: 63.5477 },
    ],
    [
        Dist { quantiles: [0.0000, 0.0000, 0.0002, 0.0010, 0.0041, 0.0164, 0.0643, 0.1491, 0.2742, 0.4541, 0.7082, 1.0712, 1.6355, 2.0593, 2.6863, 3.1562, 3.8165, 5.0299, 6.6182, 7.8761, 10.8050], mean: 0.9968, var: 1.9866 },
        Dist { quantiles: [2.1492, 2.7408, 3.1006, 3.6573, 4.2492, 5.0456, 6.1725, 7.1358, 8.0469, 8.9711, 9.9627, 11.1406, 12.6507, 13.6329, 14.9878, 15.8950, 17.1152, 19.1862, 21.6562, 23.4185, 27.4229], mean: 9.5992, var: 16.1380 },
        Dist { quantiles: [5.7117, 6.6793, 7.2099, 8.1556, 8.9856, 10.0689, 11.5458, 12.7541, 13.8617, 14.9736, 16.1761, 17.5428, 19.2471, 20.3580, 21.8556, 22.8784, 24.2219, 26.4083, 29.2094, 31.2480, 36.0166], mean: 15.5784, var: 22.3126 },
        Dist { quantiles: [9.6053, 10.8878, 11.6023, 12.7185, 13.7734, 15.0349, 16.7700, 18.1538, 19.4087, 20.6580, 22.0054, 23.5204, 25.4272, 26.6701, 28.3120, 29.3915, 30.8773, 33.2809, 36.2169, 38.3804, 42.7104], mean: 21.2746, var: 27.8847 },
        Dist { quantiles: [13.8593, 15.3603, 16.2014, 17.4469, 18.6049, 20.0486, 21.9875, 23.4964, 24.8979, 26.3009, 27.7638, 29.3985, 31.4502, 32.8154, 34.5258, 35.7054, 37.2709, 39.8049, 42.8322, 45.1380, 50.2593], mean: 26.8964, var: 33.0589 },
        Dist { quantiles: [18.3478, 20.0425, 20.8973, 22.2424, 23.5350, 25.1112, 27.2247, 28.8961, 30.4004, 31.9112, 33.4847, 35.2296, 37.4346, 38.8361, 40.6434, 41.8735, 43.5327, 46.2304, 49.5505, 51.9492, 57.0937], mean: 32.5034, var: 38.0329 },
        Dist { quantiles: [22.6923, 24.5136, 25.5389, 27.0528, 28.4967, 30.2475, 32.5659, 34.3213, 35.9511, 37.5255, 39.1704, 41.0365, 43.3173, 44.7823, 46.7474, 48.0703, 49.8162, 52.5826, 56.0832, 58.7505, 63.9187], mean: 38.1212, var: 42.7513 },
        Dist { quantiles: [27.2401, 29.2608, 30.3597, 32.0247, 33.5916, 35.4372, 37.8888, 39.7756, 41.4714, 43.1334, 44.8549, 46.7936, 49.1727, 50.7424, 52.7540, 54.1063, 55.8959, 58.8655, 62.4558, 65.0225, 70.5269], mean: 43.7237, var: 47.0613 },
        Dist { quantiles: [31.7836, 34.2614, 35.3282, 37.0934, 38.7569, 40.7058, 43.2695, 45.2598, 47.0260, 48.7431, 50.5751, 52.6071, 55.0928, 56.7257, 58.8047, 60.2069, 62.0921, 65.1822, 68.7839, 71.3507, 77.5731], mean: 49.3725, var: 51.4152 },
        Dist { quantiles: [36.7172, 39.0507, 40.2904, 42.2110, 43.9308, 45.9915, 48.6696, 50.7717, 52.6059, 54.4107, 56.2992, 58.4223, 61.0210, 62.7121, 64.8423, 66.2779, 68.2316, 71.2681, 75.0541, 77.7859, 84.0444], mean: 55.0276, var: 55.4974 },
        Dist { quantiles: [41.6198, 44.1762, 45.3429, 47.3709, 49.1491, 51.3822, 54.1630, 56.2725, 58.1992, 60.0860, 62.0626, 64.2851, 66.9470, 68.6183, 70.8029, 72.2232, 74.2120, 77.5028, 81.4646, 84.3989, 89.9453], mean: 60.7063, var: 59.3087 },
        Dist { quantiles: [46.7183, 49.1964, 50.5230, 52.5831, 54.4696, 56.7125, 59.6315, 61.8484, 63.8574, 65.8177, 67.7967, 70.0430, 72.7970, 74.5352, 76.8595, 78.3681, 80.4539, 83.7164, 87.7597, 90.5603, 96.2565], mean: 66.3972, var: 63.1658 },
    ],
];

