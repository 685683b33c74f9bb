// (x, erfcx(x)) reference values, 30-digit evaluation
pub const ERFCX_TABLE: &[(f64, f64)] = &[
    (0.0, 1.0),
    (0.07518796992481203, 0.920508228625001),
    (0.15037593984962405, 0.8506081779607847),
    (0.22556390977443608, 0.7888625347054867),
    (0.3007518796992481, 0.7340826258928325),
    (0.37593984962406013, 0.6852805805675133),
    (0.45112781954887216, 0.6416315011297365),
    (0.5263157894736842, 0.6024434003690206),
    (0.6015037593984962, 0.5671331934954953),
    (0.6766917293233082, 0.5352074344719555),
    (0.7518796992481203, 0.5062467874771069),
    (0.8270676691729323, 0.47989345275045237),
    (0.9022556390977443, 0.4558409399431629),
    (0.9774436090225563, 0.4338257150786863),
    (1.0526315789473684, 0.41362034940118125),
    (1.1278195488721805, 0.39502787725133104),
    (1.2030075187969924, 0.37787713124720274),
    (1.2781954887218046, 0.3620188706517253),
    (1.3533834586466165, 0.34732255603177536),
    (1.4285714285714286, 0.3336736525414603),
    (1.5037593984962405, 0.32097136720494485),
    (1.5789473684210527, 0.3091267438131794),
    (1.6541353383458646, 0.2980610535418135),
    (1.7293233082706767, 0.28770443095767345),
    (1.8045112781954886, 0.27799471433627404),
    (1.8796992481203008, 0.2688764566494972),
    (1.9548872180451127, 0.2603000795793521),
    (2.030075187969925, 0.25222114776624044),
    (2.1052631578947367, 0.2445997444400909),
    (2.180451127819549, 0.2373999327923349),
    (2.255639097744361, 0.23058929006986328),
    (2.330827067669173, 0.22413850352276818),
    (2.406015037593985, 0.21802101910643418),
    (2.481203007518797, 0.21221273529761553),
    (2.556390977443609, 0.2066917355913156),
    (2.6315789473684212, 0.20143805424694727),
    (2.706766917293233, 0.1964334706857446),
    (2.781954887218045, 0.19166132863686186),
    (2.857142857142857, 0.18710637671147068),
    (2.9323308270676693, 0.18275462757228078),
    (3.007518796992481, 0.17859323327643645),
    (3.082706766917293, 0.17461037471587976),
    (3.1578947368421053, 0.17079516337184347),
    (3.2330827067669174, 0.1671375538480262),
    (3.308270676691729, 0.1636282658575319),
    (3.3834586466165413, 0.16025871451786325),
    (3.4586466165413534, 0.15702094796115296),
    (3.5338345864661656, 0.1539075913975444),
    (3.6090225563909772, 0.15091179688165293),
    (3.6842105263157894, 0.14802719812822596),
    (3.7593984962406015, 0.14524786980588658),
    (3.8345864661654137, 0.14256829080920308),
    (3.9097744360902253, 0.13998331107097448),
    (3.9849624060150375, 0.137488121529978),
    (4.06015037593985, 0.13507822691569765),
    (4.135338345864661, 0.13274942105175072),
    (4.2105263157894735, 0.13049776441471816),
    (4.285714285714286, 0.1283195637155906),
    (4.360902255639098, 0.12621135329768488),
    (4.43609022556391, 0.12416987816819658),
    (4.511278195488722, 0.12219207850098163),
    (4.586466165413534, 0.12027507546609033),
    (4.661654135338346, 0.11841615825734018),
    (4.7368421052631575, 0.11661277220309464),
    (4.81203007518797, 0.11486250785765437),
    (4.887218045112782, 0.11316309098147871),
    (4.962406015037594, 0.11151237332801577),
    (5.037593984962406, 0.1099083241633887),
    (5.112781954887218, 0.10834902245269784),
    (5.18796992481203, 0.10683264965336982),
    (5.2631578947368425, 0.10535748306191893),
    (5.338345864661654, 0.10392188966577118),
    (5.413533834586466, 0.10252432045651329),
    (5.488721804511278, 0.10116330516513744),
    (5.56390977443609, 0.09983744738361312),
    (5.639097744360902, 0.09854542004048532),
    (5.714285714285714, 0.09728596120121458),
    (5.7894736842105265, 0.0960578701666821),
    (5.864661654135339, 0.09486000384571415),
    (5.93984962406015, 0.09369127337966682),
    (6.015037593984962, 0.09255064099908039),
    (6.090225563909774, 0.09143711709418671),
    (6.165413533834586, 0.09034975748265336),
    (6.2406015037593985, 0.08928766085939366),
    (6.315789473684211, 0.08824996641457887),
    (6.390977443609023, 0.08723585160717075),
    (6.466165413533835, 0.08624453008236481),
    (6.541353383458647, 0.08527524972230517),
    (6.616541353383458, 0.08432729082031437),
    (6.69172932330827, 0.08339996436968189),
    (6.7669172932330826, 0.08249261045878403),
    (6.842105263157895, 0.08160459676497024),
    (6.917293233082707, 0.08073531714025527),
    (6.992481203007519, 0.07988419028240708),
    (7.067669172932331, 0.07905065848552272),
    (7.142857142857143, 0.07823418646464361),
    (7.2180451127819545, 0.07743426024938097),
    (7.293233082706767, 0.07665038614190575),
    (7.368421052631579, 0.07588208973500958),
    (7.443609022556391, 0.07512891498626385),
    (7.518796992481203, 0.07439042334460072),
    (7.593984962406015, 0.07366619292590985),
    (7.669172932330827, 0.07295581773449393),
    (7.7443609022556394, 0.07225890692745446),
    (7.819548872180451, 0.07157508411929009),
    (7.894736842105263, 0.07090398672418291),
    (7.969924812030075, 0.07024526533362681),
    (8.045112781954888, 0.06959858312721613),
    (8.1203007518797, 0.0689636153145647),
    (8.19548872180451, 0.06834004860646495),
    (8.270676691729323, 0.0677275807135264),
    (8.345864661654135, 0.06712591987065208),
    (8.421052631578947, 0.06653478438582171),
    (8.496240601503759, 0.06595390221175296),
    (8.571428571428571, 0.06538301053910676),
    (8.646616541353383, 0.06482185540999003),
    (8.721804511278195, 0.06427019135059069),
    (8.796992481203008, 0.06372778102185522),
    (8.87218045112782, 0.06319439488718905),
    (8.947368421052632, 0.06266981089622478),
    (9.022556390977444, 0.062153814183764075),
    (9.097744360902256, 0.0616461967830549),
    (9.172932330827068, 0.06114675735261807),
    (9.24812030075188, 0.06065530091588579),
    (9.323308270676693, 0.06017163861296013),
    (9.398496240601503, 0.05969558746384139),
    (9.473684210526315, 0.05922697014251603),
    (9.548872180451127, 0.05876561476133005),
    (9.62406015037594, 0.058311354665108305),
    (9.699248120300751, 0.05786402823451213),
    (9.774436090225564, 0.057423478698157296),
    (9.849624060150376, 0.05698955395304256),
    (9.924812030075188, 0.056562106392865005),
    (10.0, 0.05614099274382259),
    (10.075187969924812, 0.05572607390752763),
    (10.150375939849624, 0.055317214810675905),
    (10.225563909774436, 0.05491428426113626),
    (10.300751879699249, 0.054517154810144526),
    (10.37593984962406, 0.054125702620302966),
    (10.451127819548873, 0.05373980733910301),
    (10.526315789473685, 0.05335935197770475),
    (10.601503759398497, 0.052984222794720905),
    (10.676691729323307, 0.052614309184766936),
    (10.75187969924812, 0.05224950357155163),
    (10.827067669172932, 0.0518897013052947),
    (10.902255639097744, 0.051534800564269095),
    (10.977443609022556, 0.05118470226027672),
    (11.052631578947368, 0.050839309947875964),
    (11.12781954887218, 0.05049852973718916),
    (11.203007518796992, 0.05016227021012693),
    (11.278195488721805, 0.04983044233987478),
    (11.353383458646617, 0.049502959413495085),
    (11.428571428571429, 0.04917973695750547),
    (11.503759398496241, 0.04886069266630107),
    (11.578947368421053, 0.04854574633329536),
    (11.654135338345865, 0.04823481978466008),
    (11.729323308270677, 0.04792783681555105),
    (11.80451127819549, 0.04762472312871195),
    (11.8796992481203, 0.04732540627535369),
    (11.954887218045112, 0.04702981559821185),
    (12.030075187969924, 0.04673788217668949),
    (12.105263157894736, 0.04644953877399701),
    (12.180451127819548, 0.046164719786204955),
    (12.25563909774436, 0.0458833611931299),
    (12.330827067669173, 0.04560540051097695),
    (12.406015037593985, 0.04533077674666644),
    (12.481203007518797, 0.045059430353775305),
    (12.556390977443609, 0.044791303190027394),
    (12.631578947368421, 0.044526338476269536),
    (12.706766917293233, 0.044264480756873385),
    (12.781954887218046, 0.04400567586150572),
    (12.857142857142858, 0.04374987086821254),
    (12.93233082706767, 0.0434970140677646),
    (13.007518796992482, 0.04324705492921468),
    (13.082706766917294, 0.04299994406661882),
    (13.157894736842104, 0.042755633206876115),
    (13.233082706766917, 0.04251407515864338),
    (13.308270676691729, 0.042275223782283454),
    (13.38345864661654, 0.04203903396080693),
    (13.458646616541353, 0.04180546157176973),
    (13.533834586466165, 0.04157446346008981),
    (13.609022556390977, 0.041345997411748416),
    (13.68421052631579, 0.04112002212834246),
    (13.759398496240602, 0.040896497202456146),
    (13.834586466165414, 0.04067538309382141),
    (13.909774436090226, 0.040456641106237756),
    (13.984962406015038, 0.040240233365223636),
    (14.06015037593985, 0.04002612279637249),
    (14.135338345864662, 0.039814273104387635),
    (14.210526315789474, 0.03960464875277145),
    (14.285714285714286, 0.03939721494414521),
    (14.360902255639099, 0.03919193760117684),
    (14.436090225563909, 0.038988783348094816),
    (14.511278195488721, 0.038787719492767464),
    (14.586466165413533, 0.03858871400932756),
    (14.661654135338345, 0.03839173552132299),
    (14.736842105263158, 0.038196753285375036),
    (14.81203007518797, 0.03800373717532663),
    (14.887218045112782, 0.0378126576668635),
    (14.962406015037594, 0.037623485822591854),
    (15.037593984962406, 0.03743619327755696),
    (15.112781954887218, 0.0372507522251875),
    (15.18796992481203, 0.03706713540365113),
    (15.263157894736842, 0.03688531608260747),
    (15.338345864661655, 0.03670526805034495),
    (15.413533834586467, 0.03652696560128866),
    (15.488721804511279, 0.03635038352386688),
    (15.563909774436091, 0.0361754970887243),
    (15.639097744360901, 0.03600228203727042),
    (15.714285714285714, 0.03583071457055213),
    (15.789473684210526, 0.03566077133843986),
    (15.864661654135338, 0.03549242942911695),
    (15.93984962406015, 0.03532566635886252),
    (16.015037593984964, 0.035160460062118246),
    (16.090225563909776, 0.03499678888182994),
    (16.165413533834588, 0.0348346315600551),
    (16.2406015037594, 0.03467396722882791),
    (16.31578947368421, 0.034514775401273665),
    (16.39097744360902, 0.03435703596296446),
    (16.466165413533833, 0.03420072916350881),
    (16.541353383458645, 0.03404583560836771),
    (16.616541353383457, 0.033892336250890054),
    (16.69172932330827, 0.03374021238456076),
    (16.76691729323308, 0.03358944563545476),
    (16.842105263157894, 0.033440017954890794),
    (16.917293233082706, 0.03329191161227863),
    (16.992481203007518, 0.033145109188153964),
    (17.06766917293233, 0.0329995935673952),
    (17.142857142857142, 0.03285534793261669),
    (17.218045112781954, 0.03271235575773298),
    (17.293233082706767, 0.03257060080168907),
    (17.36842105263158, 0.03243006710235164),
    (17.44360902255639, 0.03229073897055643),
    (17.518796992481203, 0.03215260098430724),
    (17.593984962406015, 0.03201563798312195),
    (17.669172932330827, 0.03187983506252132),
    (17.74436090225564, 0.031745177568656385),
    (17.81954887218045, 0.03161165109307037),
    (17.894736842105264, 0.031479241467591186),
    (17.969924812030076, 0.031347934759350875),
    (18.045112781954888, 0.0312177172659281),
    (18.1203007518797, 0.03108857551061045),
    (18.195488721804512, 0.03096049623777285),
    (18.270676691729324, 0.030833466408368974),
    (18.345864661654137, 0.030707473195532364),
    (18.42105263157895, 0.030582503980284156),
    (18.49624060150376, 0.030458546347344476),
    (18.571428571428573, 0.030335588081044522),
    (18.646616541353385, 0.030213617161336574),
    (18.721804511278197, 0.03009262175989922),
    (18.796992481203006, 0.029972590236335094),
    (18.872180451127818, 0.02985351113445865),
    (18.94736842105263, 0.029735373178671472),
    (19.022556390977442, 0.029618165270422707),
    (19.097744360902254, 0.02950187648475232),
    (19.172932330827066, 0.029386496066914902),
    (19.24812030075188, 0.029272013429081898),
    (19.32330827067669, 0.029158418147120075),
    (19.398496240601503, 0.029045699957444243),
    (19.473684210526315, 0.02893384875394221),
    (19.548872180451127, 0.028822854584970053),
    (19.62406015037594, 0.028712707650415836),
    (19.69924812030075, 0.02860339829882999),
    (19.774436090225564, 0.02849491702462055),
    (19.849624060150376, 0.02838725446531159),
    (19.924812030075188, 0.028280401398863186),
    (20.0, 0.02817434874105132),
    (20.075187969924812, 0.02806908754290612),
    (20.150375939849624, 0.027964608988206997),
    (20.225563909774436, 0.02786090439103316),
    (20.30075187969925, 0.027757965193368102),
    (20.37593984962406, 0.027655782962756698),
    (20.451127819548873, 0.027554349390013538),
    (20.526315789473685, 0.027453656286981213),
    (20.601503759398497, 0.027353695584337295),
    (20.67669172932331, 0.02725445932944876),
    (20.75187969924812, 0.02715593968427271),
    (20.827067669172934, 0.027058128923302158),
    (20.902255639097746, 0.02696101943155583),
    (20.977443609022558, 0.02686460370261084),
    (21.05263157894737, 0.026768874336677195),
    (21.127819548872182, 0.026673824038713094),
    (21.203007518796994, 0.026579445616580016),
    (21.278195488721803, 0.02648573197923662),
    (21.353383458646615, 0.026392676134970507),
    (21.428571428571427, 0.026300271189666942),
    (21.50375939849624, 0.026208510345113612),
    (21.57894736842105, 0.02611738689734055),
    (21.654135338345863, 0.0260268942349944),
    (21.729323308270676, 0.0259370258377462),
    (21.804511278195488, 0.02584777527473183),
    (21.8796992481203, 0.025759136203024405),
    (21.954887218045112, 0.02567110236613783),
    (22.030075187969924, 0.025583667592560772),
    (22.105263157894736, 0.02549682579432035),
    (22.18045112781955, 0.02541057096557481),
    (22.25563909774436, 0.02532489718123455),
    (22.330827067669173, 0.02523979859561079),
    (22.406015037593985, 0.025155269441091272),
    (22.481203007518797, 0.025071304026842347),
    (22.55639097744361, 0.02498789673753684),
    (22.63157894736842, 0.024905042032107118),
    (22.706766917293233, 0.02482273444252273),
    (22.781954887218046, 0.024740968572592125),
    (22.857142857142858, 0.024659739096787845),
    (22.93233082706767, 0.024579040759094672),
    (23.007518796992482, 0.024498868371880228),
    (23.082706766917294, 0.02441921681478748),
    (23.157894736842106, 0.024340081033648712),
    (23.23308270676692, 0.02426145603942041),
    (23.30827067669173, 0.024183336907138656),
    (23.383458646616543, 0.024105718774894556),
    (23.458646616541355, 0.0240285968428292),
    (23.533834586466167, 0.023951966372147835),
    (23.60902255639098, 0.023875822684152684),
    (23.68421052631579, 0.023800161159294127),
    (23.7593984962406, 0.023724977236239776),
    (23.834586466165412, 0.023650266410961032),
    (23.909774436090224, 0.02357602423583682),
    (23.984962406015036, 0.023502246318774025),
    (24.06015037593985, 0.023428928322344375),
    (24.13533834586466, 0.023356065962937322),
    (24.210526315789473, 0.02328365500992862),
    (24.285714285714285, 0.023211691284864274),
    (24.360902255639097, 0.023140170660659494),
    (24.43609022556391, 0.023069089060812363),
    (24.51127819548872, 0.022998442458631876),
    (24.586466165413533, 0.02292822687648009),
    (24.661654135338345, 0.02285843838502802),
    (24.736842105263158, 0.02278907310252508),
    (24.81203007518797, 0.02272012719408166),
    (24.887218045112782, 0.022651596870964713),
    (24.962406015037594, 0.022583478389905945),
    (25.037593984962406, 0.022515768052422416),
    (25.112781954887218, 0.022448462204149287),
    (25.18796992481203, 0.022381557234184443),
    (25.263157894736842, 0.022315049574444763),
    (25.338345864661655, 0.022248935699033783),
    (25.413533834586467, 0.022183212123620517),
    (25.48872180451128, 0.022117875404829228),
    (25.56390977443609, 0.022052922139639896),
    (25.639097744360903, 0.021988348964799193),
    (25.714285714285715, 0.02192415255624173),
    (25.789473684210527, 0.02186032962852136),
    (25.86466165413534, 0.02179687693425239),
    (25.93984962406015, 0.0217337912635604),
    (26.015037593984964, 0.021671069443542603),
    (26.090225563909776, 0.021608708337737422),
    (26.165413533834588, 0.021546704845603233),
    (26.2406015037594, 0.021485055902005966),
    (26.31578947368421, 0.02142375847671547),
    (26.39097744360902, 0.02136280957391045),
    (26.466165413533833, 0.0213022062316918),
    (26.541353383458645, 0.021241945521604143),
    (26.616541353383457, 0.02118202454816548),
    (26.69172932330827, 0.021122440448404698),
    (26.76691729323308, 0.021063190391406902),
    (26.842105263157894, 0.021004271577866277),
    (26.917293233082706, 0.02094568123964647),
    (26.992481203007518, 0.020887416639348254),
    (27.06766917293233, 0.02082947506988436),
    (27.142857142857142, 0.020771853854061353),
    (27.218045112781954, 0.02071455034416841),
    (27.293233082706767, 0.02065756192157285),
    (27.36842105263158, 0.020600885996322302),
    (27.44360902255639, 0.020544520006753397),
    (27.518796992481203, 0.020488461419106825),
    (27.593984962406015, 0.02043270772714867),
    (27.669172932330827, 0.02037725645179788),
    (27.74436090225564, 0.020322105140759796),
    (27.81954887218045, 0.02026725136816554),
    (27.894736842105264, 0.02021269273421727),
    (27.969924812030076, 0.0201584268648391),
    (28.045112781954888, 0.020104451411333605),
    (28.1203007518797, 0.020050764050043825),
    (28.195488721804512, 0.01999736248202066),
    (28.270676691729324, 0.01994424443269553),
    (28.345864661654137, 0.01989140765155823),
    (28.42105263157895, 0.019838849911839887),
    (28.49624060150376, 0.019786569010200903),
    (28.571428571428573, 0.01973456276642379),
    (28.646616541353385, 0.01968282902311087),
    (28.721804511278197, 0.019631365645386634),
    (28.796992481203006, 0.019580170520604817),
    (28.872180451127818, 0.019529241558059966),
    (28.94736842105263, 0.019478576688703526),
    (29.022556390977442, 0.019428173864864316),
    (29.097744360902254, 0.019378031059973298),
    (29.172932330827066, 0.019328146268292604),
    (29.24812030075188, 0.019278517504648728),
    (29.32330827067669, 0.019229142804169794),
    (29.398496240601503, 0.01918002022202684),
    (29.473684210526315, 0.019131147833179065),
    (29.548872180451127, 0.019082523732122908),
    (29.62406015037594, 0.019034146032644996),
    (29.69924812030075, 0.01898601286757877),
    (29.774436090225564, 0.018938122388564804),
    (29.849624060150376, 0.018890472765814757),
    (29.924812030075188, 0.018843062187878835),
    (30.0, 0.01879588886141675),
    (1e-08, 0.9999999887162084),
    (1.075056371589181e-08, 0.999999987869288),
    (1.1557462020944953e-08, 0.9999999869588008),
    (1.2424923185016845e-08, 0.9999999859799756),
    (1.33574928365585e-08, 0.9999999849276835),
    (1.4360057782399058e-08, 0.9999999837964102),
    (1.5437871615356914e-08, 0.9999999825802275),
    (1.659658224386521e-08, 0.9999999812727626),
    (1.7842261487871164e-08, 0.9999999798671642),
    (1.9181436896096154e-08, 0.9999999783560666),
    (2.0621125951383975e-08, 0.9999999767315515),
    (2.2168872843378358e-08, 0.9999999749851062),
    (2.3832788001224268e-08, 0.999999973107579),
    (2.5621590593450332e-08, 0.9999999710891316),
    (2.7544654217738205e-08, 0.9999999689191867),
    (2.9612056020000266e-08, 0.9999999665863738),
    (3.183462950015705e-08, 0.9999999640784683),
    (3.422402128132474e-08, 0.9999999613823285),
    (3.6792752139891896e-08, 0.9999999584838264),
    (3.9554282616292254e-08, 0.9999999553677731),
    (4.252308355028417e-08, 0.9999999520178402),
    (4.571471191035209e-08, 0.9999999484164735),
    (4.914589231458784e-08, 0.9999999445448013),
    (5.283460467023342e-08, 0.9999999403825356),
    (5.680017839112994e-08, 0.9999999359078653),
    (6.106339368678636e-08, 0.9999999310973424),
    (6.564659045383824e-08, 0.9999999259257593),
    (7.057378534050431e-08, 0.9999999203660158),
    (7.58707975974763e-08, 0.9999999143889784),
    (8.156538437472004e-08, 0.9999999079633262),
    (8.76873861731634e-08, 0.9999999010553879),
    (9.426888321346037e-08, 0.9999998936289649),
    (1.0134436354122695e-07, 0.9999998856451418),
    (1.0895090374964634e-07, 0.9999998770620818),
    (1.1712836326645689e-07, 0.9999998678348088),
    (1.2591959322341665e-07, 0.9999998579149701),
    (1.3537066100275195e-07, 0.9999998472505847),
    (1.4553109163724755e-07, 0.9999998357857692),
    (1.5645412732895196e-07, 0.9999998234604466),
    (1.6819700644641482e-07, 0.9999998102100303),
    (1.8082126346244481e-07, 0.999999795965086),
    (1.9439305140410728e-07, 0.9999997806509684),
    (2.0898348850464874e-07, 0.999999764187429),
    (2.2466903087385699e-07, 0.9999997464881966),
    (2.4153187313970637e-07, 0.9999997274605245),
    (2.5966037916071114e-07, 0.9999997070047051),
    (2.791495450659851e-07, 0.9999996850135467),
    (3.001014970494085e-07, 0.9999996613718127),
    (3.2262602652641844e-07, 0.999999635955617),
    (3.4684116545772627e-07, 0.999999608631775),
    (3.72873804854746e-07, 0.9999995792571057),
    (4.008603597077956e-07, 0.9999995476776818),
    (4.309474838213967e-07, 0.9999995137280229),
    (4.63292838302518e-07, 0.9999994772302276),
    (4.980659177287582e-07, 0.9999994379930427),
    (5.354489383257143e-07, 0.9999993958108596),
    (5.756377928077216e-07, 0.9999993504626382),
    (6.188430768854739e-07, 0.9999993017107474),
    (6.652911928195822e-07, 0.9999992492997206),
    (7.152255358028583e-07, 0.9999991929549171),
    (7.689077693881487e-07, 0.9999991323810828),
    (8.26619196645154e-07, 0.9999990672608027),
    (8.88662234231303e-07, 0.999998997252838),
    (9.553619971010395e-07, 0.9999989219903381),
    (1.0270680021576371e-06, 0.999998841078918),
    (1.1041559997749385e-06, 0.9999987540945918),
    (1.18702994278647e-06, 0.9999986605815508),
    (1.2761241032597357e-06, 0.9999985600497757),
    (1.3719053481479088e-06, 0.9999984519724681),
    (1.474875585743683e-06, 0.9999983357832902),
    (1.585574395755072e-06, 0.999998210873398),
    (1.704581856785156e-06, 0.9999980765882498),
    (1.8325215860321987e-06, 0.9999979322241772),
    (1.9700640071386267e-06, 0.9999977770246976),
    (2.1179298633128945e-06, 0.9999976101765505),
    (2.2768939941335307e-06, 0.9999974308054356),
    (2.4477893958263914e-06, 0.999997237971432),
    (2.631511586291594e-06, 0.9999970306640729),
    (2.829023297753531e-06, 0.9999968077970509),
    (3.0413595216241708e-06, 0.999996568202526),
    (3.269632932015488e-06, 0.9999963106250059),
    (3.515039716321066e-06, 0.9999960337147681),
    (3.7788658434199897e-06, 0.9999957360207868),
    (4.062493802349385e-06, 0.9999954159831308),
    (4.367409846757265e-06, 0.999995071924789),
    (4.695211783097726e-06, 0.9999947020428838),
    (5.047617343379811e-06, 0.9999943043992247),
    (5.42647318634452e-06, 0.9999938769101522),
    (5.833764574237522e-06, 0.9999934173356213),
    (6.271625775885294e-06, 0.9999929232674638),
    (6.742351250588426e-06, 0.9999923921167707),
    (7.248407671437371e-06, 0.999991821100328),
    (7.792446851054645e-06, 0.9999912072260344),
    (8.377319637496346e-06, 0.999990547277224),
    (9.006090853129615e-06, 0.9999898377958135),
    (9.682055354768036e-06, 0.9999890750641846),
    (1.0408755299222525e-05, 0.9999882550857063),
    (1.1189998704741828e-05, 0.9999873735637967),
    (1.2029879405607386e-05, 0.9999864258794128),
    (1.293279850444769e-05, 0.999985407066851),
    (1.390348743468552e-05, 0.9999843117877336),
    (1.4947032753968787e-05, 0.9999831343030418),
    (1.6068902798506328e-05, 0.9999818684430506),
    (1.727497633798145e-05, 0.9999805075750091),
    (1.8571573381199297e-05, 0.999979044568395),
    (1.9965488293894335e-05, 0.999977471757563),
    (2.1464025402240312e-05, 0.999975780901591),
    (2.307503726863048e-05, 0.9999739631411142),
    (2.480696584029901e-05, 0.9999720089519211),
    (2.6668886686408615e-05, 0.9999699080950687),
    (2.8670556555413462e-05, 0.9999676495632569),
    (3.0822464501905205e-05, 0.9999652215231798),
    (3.313588685085455e-05, 0.9999626112535539),
    (3.562294628726934e-05, 0.9999598050784991),
    (3.829667538090807e-05, 0.9999567882959243),
    (4.117108487892774e-05, 0.9999535451005417),
    (4.426123712433026e-05, 0.999950058501111),
    (4.758332498493084e-05, 0.9999463102314776),
    (5.115475670644857e-05, 0.9999422806549431),
    (5.499424713436193e-05, 0.9999379486614656),
    (5.912191578254585e-05, 0.9999332915571577),
    (6.355939226258489e-05, 0.9999282849455009),
    (6.832992962622797e-05, 0.99992290259966),
    (7.345852621491673e-05, 0.9999171163252305),
    (7.897205665489711e-05, 0.9999108958127032),
    (8.489941268434893e-05, 0.9999042084788783),
    (9.127165455048865e-05, 0.9998970192964018),
    (9.81221737699895e-05, 0.9998892906105382),
    (0.00010548686810560801, 0.9998809819422239),
    (0.00011340432967592146, 0.9998720497763802),
    (0.00012191604718389942, 0.9998624473343826),
    (0.0001310666233240183, 0.9998521243295058),
    (0.00014090400850716504, 0.9998410267040756),
    (0.00015147975212808395, 0.9998290963469627),
    (0.00016284927269204645, 0.9998162707899548),
    (0.00017507214821624857, 0.9998024828814351),
    (0.0001882124284276835, 0.9997876604356771),
    (0.00020233897039345384, 0.9997717258559446),
    (0.00021752579934227723, 0.9997545957294481),
    (0.0002338524965679448, 0.9997361803920708),
    (0.00025140461644740614, 0.9997163834606191),
    (0.0002702741347587182, 0.9996951013301923),
    (0.00029055993064811296, 0.9996722226340876),
    (0.0003123683047717644, 0.9996476276634693),
    (0.0003358135363273965, 0.9996211877438292),
    (0.0003610184818946625, 0.9995927645650505),
    (0.00038811521922231036, 0.9995622094616525),
    (0.0004172457393356765, 0.9995293626395527),
    (0.00044856269059125763, 0.9994940523454139),
    (0.0004822301785773179, 0.9994560939743626),
    (0.0005184246260521343, 0.9994152891115682),
    (0.0005573356974260854, 0.9993714245028426),
    (0.0005991672926320131, 0.9993242709490869),
    (0.000644138615591885, 0.9992735821190376),
    (0.0006924853228786902, 0.9992190932743799),
    (0.0007444607585927271, 0.9991605199008816),
    (0.0008003372819232264, 0.9990975562387571),
    (0.0008604076943519313, 0.9990298737050033),
    (0.0009249867739774003, 0.9989571191999556),
    (0.000994412925000126, 0.998878913289779),
    (0.0010690499510120199, 0.9987948482560545),
    (0.0011492889613825739, 0.99870448600303),
    (0.0012355504207314481, 0.9986073558124785),
    (0.0013282863522270367, 0.9985029519354528),
    (0.001427982706256627, 0.9983907310095275),
    (0.0015351619068803488, 0.9982701092893995),
    (0.001650385589412716, 0.9981404596779484),
    (0.0017742575434771062, 0.9980011085440675),
    (0.0019074268769552316, 0.9978513323127429),
    (0.0020505914174111747, 0.997690353811997),
    (0.002204501368813973, 0.9975173383604198),
    (0.002369963242720533, 0.9973313895780923),
    (0.0025478440845188655, 0.997131544902763),
    (0.0027390760168778104, 0.9969167707921782),
    (0.0029446611242116053, 0.9966859575924943),
    (0.003165676703754647, 0.996437914051724),
    (0.0034032809107628695, 0.9961713614561982),
    (0.003658718827423454, 0.9958849273670781),
    (0.0039333289872748815, 0.9955771389330282),
    (0.004228550389326282, 0.9952464157543024),
    (0.004545930038631131, 0.9948910622726954),
    (0.0048871310528290504, 0.994509259661121),
    (0.005253941377135213, 0.9940990571860074),
    (0.0056482831534452466, 0.9936583630152936),
    (0.006072222792651145, 0.9931849344446151),
    (0.006527981802948664, 0.9926763675143081),
    (0.00701794843087819, 0.9921300859902278),
    (0.007544690176099894, 0.991543329682102),
    (0.008110967245482492, 0.9909131420743181),
    (0.008719747017007102, 0.9902363572457539),
    (0.00937421958927924, 0.9895095860576032),
    (0.010077814498130762, 0.9887292015912312),
    (0.0108342186879093, 0.9878913238220541),
    (0.01164739583162747, 0.986991803520411),
    (0.01252160710121238, 0.9860262053765528),
    (0.013461433496694705, 0.9849897903543958),
    (0.014471799851345672, 0.9838774972877822),
    (0.015558000638552527, 0.9826839237438894),
    (0.01672572771566444, 0.9814033061913865),
    (0.017981100150190815, 0.9800294995262326),
    (0.019330696284645815, 0.9785559560259562),
    (0.020781588208063796, 0.9769757038241784),
    (0.022341378814821573, 0.9752813250214056),
    (0.02401824164496148, 0.9734649335761038),
    (0.02582096371478445, 0.9715181531521663),
    (0.02775899156215207, 0.9694320951355349),
    (0.0298424807477819, 0.9671973370743167),
    (0.032082349071930395, 0.9648039018437069),
    (0.034490333785327024, 0.9622412378897304),
    (0.037079053094153415, 0.9594982009646362),
    (0.03986207228136317, 0.9565630378319767),
    (0.042853974790827955, 0.9534233724911716),
    (0.046070438646801735, 0.9500661955497405),
    (0.049528318609152654, 0.9464778574562466),
    (0.05324573449486856, 0.9426440663979504),
    (0.05724216612865429, 0.9385498917635315),
    (0.0615385554201762, 0.9341797741719313),
    (0.06615741610285436, 0.9295175431718309),
    (0.07112295170925026, 0.9245464438203914),
    (0.07646118240125913, 0.919249173451812),
    (0.08220008131971601, 0.9136079300423815),
    (0.0883697211679097, 0.9076044736644578),
    (0.09500243179712065, 0.9012202025915957),
    (0.10213296961996138, 0.8944362456640782),
    (0.10979869973926351, 0.8872335725404197),
    (0.11803979174690235, 0.8795931234366315),
    (0.12689943021856764, 0.8714959598806459),
    (0.13642404100750782, 0.8629234378724178),
    (0.1466635345230653, 0.8538574046281001),
    (0.15767156726881085, 0.8442804197858054),
    (0.16950582301078726, 0.8341760015471402),
    (0.18222831504921524, 0.8235288977098378),
    (0.1959057111776191, 0.8123253809007042),
    (0.2106096830322088, 0.8005535665358398),
    (0.22641728166215438, 0.7882037511119302),
    (0.2434113412888013, 0.7752687673694673),
    (0.261680913369594, 0.7617443516752325),
    (0.28132173324125914, 0.7476295176663946),
    (0.3024367217875275, 0.7329269288134563),
    (0.32513652476022664, 0.7176432611394548),
    (0.3495400925798444, 0.7017895459393303),
    (0.3757753036538332, 0.6853814810533199),
    (0.4039796344789135, 0.6684396981547045),
    (0.43430088003882433, 0.6509899727216883),
    (0.46689792827252763, 0.6330633629918156),
    (0.5019415926711682, 0.6146962643644364),
    (0.5396155073667608, 0.5959303665358374),
    (0.580117089402966, 0.5768125022196494),
    (0.623658573230428, 0.5573943786886824),
    (0.670468122847588, 0.5377321865963559),
    (0.7207910274147388, 0.5178860845614596),
    (0.774890986606527, 0.4979195627250355),
    (0.8330514924383718, 0.47789869373247634),
    (0.89557731480775, 0.457891285100388),
    (0.9627960985348014, 0.4379659523705004),
    (1.0350600802710432, 0.4181911374552661),
    (1.1127479342729942, 0.39863410074217037),
    (1.1962667567128817, 0.37935991845983724),
    (1.2860541989245082, 0.3604305181878769),
    (1.3825807607628127, 0.34190378498057655),
    (1.486352256094679, 0.3238327682731062),
    (1.5979124633405386, 0.3062650156086722),
    (1.7178459749560098, 0.28924205349453413),
    (1.8467812607852871, 0.27279902874769313),
    (1.985393961338724, 0.2569645160327078),
    (2.134410428251879, 0.24176048950031673),
    (2.2946115304785755, 0.22720244909037846),
    (2.4668367461629948, 0.2132996856940087),
    (2.6519885616328507, 0.2000556643928697),
    (2.8510372005650235, 0.1874685016703549),
    (3.0650257081052104, 0.17553151091022995),
    (3.2950754165831477, 0.1642337905868229),
    (3.542391821464588, 0.1535608310901716),
    (3.8082708983309104, 0.14349511880317092),
    (4.094105893988299, 0.13401671948785043),
    (4.401394627292941, 0.12510382687235477),
    (4.731747337949665, 0.11673326622205829),
    (5.0868951244129335, 0.10888094635327564),
    (5.468699015106064, 0.1015222568087662),
    (5.879159720493253, 0.09463240964182384),
    (6.320428117106741, 0.08818672740218618),
    (6.7948165184670115, 0.08216088049136745),
    (7.304810791957378, 0.07653107810715401),
    (7.85308338514719, 0.07127421760149412),
    (8.442507329823622, 0.06636799731839861),
    (9.076171297115248, 0.061790997944619785),
    (9.75739578259859, 0.0575227371747711),
    (10.489750506200016, 0.05354370213212994),
    (11.277073118071165, 0.049835363551816746),
    (12.12348930845948, 0.04638017526685986),
    (13.033434426952677, 0.04316156207078844),
    (14.011676724385262, 0.04016389858398674),
    (15.0633423391982, 0.03737248133833888),
    (16.193942159184104, 0.03477349592289141),
    (17.40940069937753, 0.03235398070514912),
    (18.71608714741496, 0.03010178835792917),
    (20.12084873904683, 0.028005546178188224),
    (21.631046638694436, 0.026054615978499358),
    (23.25459451307119, 0.024239054159912683),
    (24.999999999999993, 0.022549572432641364),
    (-26.0, 7.657724931490568e+293),
    (-25.91304347826087, 8.387205798777541e+291),
    (-25.82608695652174, 9.326154744961438e+289),
    (-25.73913043478261, 1.0528238519155947e+288),
    (-25.652173913043477, 1.206636876994437e+286),
    (-25.565217391304348, 1.4039940039466724e+284),
    (-25.47826086956522, 1.6585237406890613e+282),
    (-25.391304347826086, 1.989050971338378e+280),
    (-25.304347826086957, 2.421797981355035e+278),
    (-25.217391304347824, 2.993627045091632e+276),
    (-25.130434782608695, 3.756862107663446e+274),
    (-25.043478260869566, 4.7865279217549114e+272),
    (-24.956521739130434, 6.191326666334785e+270),
    (-24.869565217391305, 8.130450712663838e+268),
    (-24.782608695652172, 1.083960120316082e+267),
    (-24.695652173913043, 1.4671677359133752e+265),
    (-24.608695652173914, 2.016109016615521e+263),
    (-24.52173913043478, 2.812652224156377e+261),
    (-24.434782608695652, 3.983692803991711e+259),
    (-24.347826086956523, 5.728269291710134e+257),
    (-24.26086956521739, 8.362358692634038e+255),
    (-24.17391304347826, 1.2393727361954468e+254),
    (-24.08695652173913, 1.864845534258043e+252),
    (-24.0, 2.8487318548613866e+250),
    (-23.91304347826087, 4.418023884804006e+248),
    (-23.82608695652174, 6.956204281715676e+246),
    (-23.73913043478261, 1.1119477381314418e+245),
    (-23.652173913043477, 1.8045304074535286e+243),
    (-23.565217391304348, 2.973115724528699e+241),
    (-23.47826086956522, 4.9731001304124365e+239),
    (-23.391304347826086, 8.445208453369753e+237),
    (-23.304347826086957, 1.4559998302807112e+236),
    (-23.217391304347828, 2.548473109290978e+234),
    (-23.130434782608695, 4.528627160356442e+232),
    (-23.043478260869566, 8.169977469016002e+230),
    (-22.956521739130434, 1.4963835705157667e+229),
    (-22.869565217391305, 2.7824846942280494e+227),
    (-22.782608695652172, 5.2527945809014584e+225),
    (-22.695652173913043, 1.0067365382197438e+224),
    (-22.608695652173914, 1.9588853813758795e+222),
    (-22.52173913043478, 3.86963497631345e+220),
    (-22.434782608695652, 7.760661747437307e+218),
    (-22.347826086956523, 1.580138993448221e+217),
    (-22.26086956521739, 3.2663265899182127e+215),
    (-22.17391304347826, 6.854751302022059e+213),
    (-22.08695652173913, 1.460466432503863e+212),
    (-22.0, 3.1590699094132294e+210),
    (-21.913043478260867, 6.937367070982894e+208),
    (-21.82608695652174, 1.5466708223657442e+207),
    (-21.73913043478261, 3.5008128250874706e+205),
    (-21.652173913043477, 8.044659566976617e+203),
    (-21.565217391304348, 1.8767837302060639e+202),
    (-21.47826086956522, 4.445171997630438e+200),
    (-21.391304347826086, 1.0688842806266635e+199),
    (-21.304347826086957, 2.609399597577019e+197),
    (-21.217391304347828, 6.467229492495644e+195),
    (-21.130434782608695, 1.627285422890947e+194),
    (-21.043478260869566, 4.156970822629461e+192),
    (-20.956521739130434, 1.078097400467652e+191),
    (-20.869565217391305, 2.8386170167519434e+189),
    (-20.782608695652172, 7.587931216593504e+187),
    (-20.695652173913043, 2.059243716043247e+186),
    (-20.608695652173914, 5.673615413432033e+184),
    (-20.52173913043478, 1.5870105674292341e+183),
    (-20.434782608695652, 4.506792094990014e+181),
    (-20.347826086956523, 1.2993406021399152e+180),
    (-20.26086956521739, 3.803174704043884e+178),
    (-20.17391304347826, 1.1301532086798006e+177),
    (-20.086956521739133, 3.4095428231172286e+175),
    (-20.0, 1.0442939379528289e+174),
    (-19.913043478260867, 3.2472606132853926e+172),
    (-19.82608695652174, 1.0251308737422769e+171),
    (-19.73913043478261, 3.2855589377053635e+169),
    (-19.652173913043477, 1.06907208940218e+168),
    (-19.565217391304348, 3.5316080750167816e+166),
    (-19.47826086956522, 1.1844201611855568e+165),
    (-19.391304347826086, 4.032801648460096e+163),
    (-19.304347826086957, 1.3940415330845113e+162),
    (-19.217391304347828, 4.8922917094170506e+160),
    (-19.130434782608695, 1.743077738859702e+159),
    (-19.043478260869566, 6.305056009390025e+157),
    (-18.956521739130434, 2.3154154225233692e+156),
    (-18.869565217391305, 8.632501748760409e+154),
    (-18.782608695652172, 3.267474513414144e+153),
    (-18.695652173913043, 1.2556121886942445e+152),
    (-18.608695652173914, 4.898539535398837e+150),
    (-18.52173913043478, 1.9401954983164418e+149),
    (-18.434782608695652, 7.801752128299871e+147),
    (-18.347826086956523, 3.184979079738511e+146),
    (-18.26086956521739, 1.3200451945479928e+145),
    (-18.17391304347826, 5.5544210393504084e+143),
    (-18.086956521739133, 2.3727750911541793e+142),
    (-18.0, 1.0290634002355447e+141),
    (-17.913043478260867, 4.531014693000143e+139),
    (-17.82608695652174, 2.025426972309963e+138),
    (-17.73913043478261, 9.191904174395154e+136),
    (-17.652173913043477, 4.235085355559002e+135),
    (-17.565217391304348, 1.981009816715548e+134),
    (-17.47826086956522, 9.407600533176051e+132),
    (-17.391304347826086, 4.5356432604821486e+131),
    (-17.304347826086957, 2.220070112370598e+130),
    (-17.217391304347828, 1.1032203695220388e+129),
    (-17.130434782608695, 5.565774851072165e+127),
    (-17.043478260869563, 2.850734533264289e+126),
    (-16.956521739130437, 1.4823668686091788e+125),
    (-16.869565217391305, 7.825685732327164e+123),
    (-16.782608695652172, 4.1942748593846086e+122),
    (-16.695652173913043, 2.2822286430433425e+121),
    (-16.608695652173914, 1.2607506377384949e+120),
    (-16.52173913043478, 7.070775066443201e+118),
    (-16.434782608695652, 4.0259894040814566e+117),
    (-16.347826086956523, 2.3272659408150887e+116),
    (-16.26086956521739, 1.3658002263309056e+115),
    (-16.17391304347826, 8.137596044991983e+113),
    (-16.086956521739133, 4.922354128899244e+112),
    (-16.0, 3.022855330008207e+111),
    (-15.91304347826087, 1.8846454108230864e+110),
    (-15.826086956521738, 1.192915605966659e+109),
    (-15.73913043478261, 7.665801501763959e+107),
    (-15.652173913043478, 5.0011882157423005e+106),
    (-15.565217391304348, 3.312505510136764e+105),
    (-15.478260869565217, 2.2274491581826397e+104),
    (-15.391304347826088, 1.5206412632136523e+103),
    (-15.304347826086957, 1.053934260803518e+102),
    (-15.217391304347826, 7.41597154139679e+100),
    (-15.130434782608695, 5.297736664551858e+99),
    (-15.043478260869565, 3.842204353931409e+98),
    (-14.956521739130435, 2.8290350823619004e+97),
    (-14.869565217391305, 2.1147741192480589e+96),
    (-14.782608695652174, 1.6049348998156945e+95),
    (-14.695652173913043, 1.2365697996443603e+94),
    (-14.608695652173912, 9.672698049948879e+92),
    (-14.521739130434783, 7.681471193768268e+91),
    (-14.434782608695652, 6.193112400516609e+90),
    (-14.347826086956522, 5.0692218554679527e+89),
    (-14.26086956521739, 4.212514564950741e+88),
    (-14.173913043478262, 3.553933627639404e+87),
    (-14.08695652173913, 3.044002400015983e+86),
    (-14.0, 2.646966523129141e+85),
    (-13.91304347826087, 2.3367900100752102e+84),
    (-13.826086956521738, 2.094395549784235e+83),
    (-13.73913043478261, 1.9057481459571856e+82),
    (-13.652173913043478, 1.7605164438759218e+81),
    (-13.565217391304348, 1.6511344785089512e+80),
    (-13.478260869565217, 1.5721449577788807e+79),
    (-13.391304347826088, 1.5197442484920388e+78),
    (-13.304347826086957, 1.4914757969554478e+77),
    (-13.217391304347826, 1.486037238090695e+76),
    (-13.130434782608695, 1.5031798831542303e+75),
    (-13.043478260869565, 1.5436896704768869e+74),
    (-12.956521739130435, 1.6094475260009088e+73),
    (-12.869565217391305, 1.7035756567688376e+72),
    (-12.782608695652174, 1.830685787910808e+71),
    (-12.695652173913043, 1.997257105388711e+70),
    (-12.608695652173912, 2.2121874295058563e+69),
    (-12.521739130434783, 2.487583376367249e+68),
    (-12.434782608695652, 2.8398876044121054e+67),
    (-12.347826086956522, 3.2914892327019807e+66),
    (-12.26086956521739, 3.8730357506213586e+65),
    (-12.173913043478262, 4.626774713089803e+64),
    (-12.08695652173913, 5.611422656515866e+63),
    (-12.0, 6.909321313435092e+62),
    (-11.91304347826087, 8.637052880702569e+61),
    (-11.826086956521738, 1.0961337449413636e+61),
    (-11.73913043478261, 1.4123076047809576e+60),
    (-11.652173913043478, 1.8474080335210645e+59),
    (-11.565217391304348, 2.4533761467316156e+58),
    (-11.478260869565217, 3.307754200021557e+57),
    (-11.391304347826088, 4.527621369954749e+56),
    (-11.304347826086957, 6.291797739664539e+55),
    (-11.217391304347826, 8.876610944294201e+54),
    (-11.130434782608695, 1.2714151974742165e+54),
    (-11.043478260869565, 1.8488232399247098e+53),
    (-10.956521739130435, 2.7294250016519155e+52),
    (-10.869565217391305, 4.090860965797125e+51),
    (-10.782608695652174, 6.224809343997967e+50),
    (-10.695652173913043, 9.616237243009496e+49),
    (-10.608695652173912, 1.5081761367228922e+49),
    (-10.521739130434783, 2.4014123556040696e+48),
    (-10.434782608695652, 3.88194338466577e+47),
    (-10.347826086956522, 6.370880134568691e+46),
    (-10.26086956521739, 1.0614937744026981e+46),
    (-10.173913043478262, 1.7955737559883257e+45),
    (-10.08695652173913, 3.083591411182402e+44),
    (-10.0, 5.376234283632271e+43),
    (-9.913043478260871, 9.516282479607904e+42),
    (-9.826086956521738, 1.7101107798199842e+42),
    (-9.73913043478261, 3.1199594143416993e+41),
    (-9.652173913043477, 5.778850043249615e+40),
    (-9.565217391304348, 1.086680029487482e+40),
    (-9.478260869565219, 2.0745778046118667e+39),
    (-9.391304347826086, 4.020921078067138e+38),
    (-9.304347826086957, 7.912052332268815e+37),
    (-9.217391304347824, 1.580594745238289e+37),
    (-9.130434782608695, 3.20567652469269e+36),
    (-9.043478260869566, 6.6006490201813125e+35),
    (-8.956521739130434, 1.3798165965474247e+35),
    (-8.869565217391305, 2.9283559733881415e+34),
    (-8.782608695652176, 6.309488507829238e+33),
    (-8.695652173913043, 1.3801688426551043e+33),
    (-8.608695652173914, 3.0650535371914684e+32),
    (-8.521739130434781, 6.910535318729254e+31),
    (-8.434782608695652, 1.5818055593976958e+31),
    (-8.347826086956523, 3.675888120131847e+30),
    (-8.26086956521739, 8.6723990301897e+29),
    (-8.173913043478262, 2.077227197141794e+29),
    (-8.086956521739129, 5.051222843619286e+28),
    (-8.0, 1.2470298161623233e+28),
    (-7.913043478260871, 3.125539032043698e+27),
    (-7.826086956521738, 7.953179722170578e+26),
    (-7.739130434782609, 2.054586578355348e+26),
    (-7.652173913043477, 5.388599139166345e+25),
    (-7.565217391304348, 1.4348122915919352e+25),
    (-7.478260869565219, 3.878663292260495e+24),
    (-7.391304347826086, 1.0644783967710728e+24),
    (-7.304347826086957, 2.965919807688291e+23),
    (-7.217391304347824, 8.389763860794583e+22),
    (-7.130434782608695, 2.409394144866921e+22),
    (-7.043478260869566, 7.024796445195747e+21),
    (-6.956521739130434, 2.0793491470598983e+21),
    (-6.869565217391305, 6.248688468398243e+20),
    (-6.782608695652176, 1.9064179053992218e+20),
    (-6.695652173913043, 5.904935033843871e+19),
    (-6.608695652173914, 1.856863245091387e+19),
    (-6.521739130434781, 5.928058711899613e+18),
    (-6.434782608695652, 1.9213781746447844e+18),
    (-6.347826086956523, 6.322385755638139e+17),
    (-6.260869565217391, 2.1121118259315194e+17),
    (-6.173913043478262, 7.163423155648878e+16),
    (-6.086956521739129, 2.466562276226421e+16),
    (-6.0, 8622463094230390.0),
    (-5.913043478260871, 3060119481527064.5),
    (-5.826086956521738, 1102587853195222.9),
    (-5.739130434782609, 403325614477080.6),
    (-5.652173913043477, 149784262364992.56),
    (-5.565217391304348, 56473453439391.62),
    (-5.478260869565219, 21616744433770.375),
    (-5.391304347826086, 8400478222845.241),
    (-5.304347826086957, 3314251892596.275),
    (-5.217391304347824, 1327500813998.8933),
    (-5.130434782608695, 539823590655.6481),
    (-5.043478260869566, 222862348925.14114),
    (-4.956521739130434, 93409130188.82677),
    (-4.869565217391305, 39747492209.37845),
    (-4.782608695652176, 17171092122.712675),
    (-4.695652173913043, 7531021439.680398),
    (-4.608695652173914, 3353340314.783047),
    (-4.521739130434781, 1515895126.7749212),
    (-4.434782608695652, 695710349.2245787),
    (-4.347826086956523, 324157109.6611727),
    (-4.260869565217391, 153338220.56391668),
    (-4.173913043478262, 73639879.15405272),
    (-4.086956521739129, 35904054.55769961),
    (-4.0, 17772220.904016286),
    (-3.913043478260871, 8931156.284870468),
    (-3.8260869565217384, 4556605.735509745),
    (-3.7391304347826093, 2360168.392057441),
    (-3.6521739130434767, 1241115.7748641542),
    (-3.5652173913043477, 662596.8384777553),
    (-3.4782608695652186, 359132.0482915061),
    (-3.391304347826086, 197618.0785864178),
    (-3.304347826086957, 110399.43030735923),
    (-3.2173913043478244, 62614.446457975326),
    (-3.1304347826086953, 36053.6841612568),
    (-3.0434782608695663, 21076.178964536615),
    (-2.9565217391304337, 12508.372169897637),
    (-2.8695652173913047, 7536.604202913938),
    (-2.7826086956521756, 4610.155053572292),
    (-2.695652173913043, 2862.981836902859),
    (-2.608695652173914, 1805.0213935360628),
    (-2.5217391304347814, 1155.3219887934447),
    (-2.4347826086956523, 750.7150579306481),
    (-2.3478260869565233, 495.21145567762983),
    (-2.2608695652173907, 331.61831504107914),
    (-2.1739130434782616, 225.42552362973154),
    (-2.086956521739129, 155.5475975854064),
    (-2.0, 108.94090438997797),
    (-1.913043478260871, 77.43711023334443),
    (-1.8260869565217384, 55.85862750609892),
    (-1.7391304347826093, 40.884092110219875),
    (-1.6521739130434767, 30.357580407334147),
    (-1.5652173913043477, 22.86327357640168),
    (-1.4782608695652186, 17.460656679994074),
    (-1.391304347826086, 13.517855795184913),
    (-1.304347826086957, 10.605609721311376),
    (-1.2173913043478244, 8.429099203418879),
    (-1.1304347826086953, 6.7836578836881705),
    (-1.0434782608695663, 5.525702483316464),
    (-0.9565217391304337, 4.553459302969385),
    (-0.8695652173913047, 3.7940587504020042),
    (-0.7826086956521756, 3.1948095759835256),
    (-0.695652173913043, 2.7172426757236425),
    (-0.608695652173914, 2.333007264643969),
    (-0.5217391304347814, 2.0210173591230634),
    (-0.43478260869565233, 1.7654497960971005),
    (-0.3478260869565233, 1.5543273228184544),
    (-0.2608695652173907, 1.3785071514467666),
    (-0.17391304347826164, 1.2309528871327629),
    (-0.08695652173912904, 1.106206141760008),
    (0.0, 1.0),
];
