public class Doubler {
    void buzzTwice(android.os.Vibrator v, long d) {
        v.vibrate(d * 2);
    }
}
