public class Notifier {
    void ring(android.app.Notification.Builder builder, android.net.Uri tone) {
        builder.setSound(tone);
    }
}
